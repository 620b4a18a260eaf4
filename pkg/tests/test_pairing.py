"""Dual pairings: the five duality axioms, closed evaluation formulas, and
graded nondegeneracy."""
import itertools
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfkit import family as fam
from hopfkit import pairing as pr
from hopfkit import verify


@pytest.fixture(scope="module")
def pud0():
    return pr.pairing_ud0_fd0(fam.build_ud0(8), fam.build_fd0(8))


@pytest.fixture(scope="module")
def pucm():
    return pr.pairing_ucm_hcm(fam.build_ucm(Q(1), 8), fam.build_hcm(Q(1), 8))


def test_duality_axioms(pud0, pucm):
    assert pr.check_duality(pud0, grade_bound=3).ok
    assert pr.check_duality(pucm, grade_bound=3).ok


def test_duality_axioms_heis():
    lam = Q(2)
    P = pr.pairing_uheis_kheis(fam.build_uheis(lam), fam.build_kheis(lam), lam)
    assert pr.check_duality(P, grade_bound=3).ok


def test_duality_axioms_bplus():
    P = pr.pairing_ubplus_fbplus(fam.build_ubplus(Q(1)), fam.build_fbplus())
    assert pr.check_duality(P, grade_bound=3).ok


def test_vanishing_sweeps(pud0):
    assert pr.check_vanishing_sweeps(pud0, grade_bound=5).ok


_PBIG = None


def _pairing_big():
    global _PBIG
    if _PBIG is None:
        _PBIG = pr.pairing_ucm_hcm(fam.build_ucm(Q(1), 18),
                                   fam.build_hcm(Q(1), 18))
    return _PBIG


@given(st.lists(st.integers(2, 6), min_size=1, max_size=3),
       st.integers(2, 6))
@settings(max_examples=60, deadline=None)
def test_closed_form_zword(ms, n):
    P = _pairing_big()
    lhs = pr.zword_tn_closed(ms, n)
    rhs = P.pair_words(tuple(fam.zname(m) for m in ms), (fam.tname(n),))
    assert lhs == rhs


def test_closed_form_diag():
    U = fam.build_ucm(Q(1), 8)
    F = fam.build_hcm(Q(1), 8)
    P = pr.pairing_ucm_hcm(U, F)
    for combo in itertools.combinations(range(2, 6), 2):
        for mults in itertools.product((1, 2), repeat=2):
            uw = tuple(itertools.chain.from_iterable(
                (fam.zname(m),) * a for m, a in zip(combo, mults)))
            fw = tuple(itertools.chain.from_iterable(
                (fam.tname(m),) * a for m, a in zip(combo, mults)))
            assert pr.diag_closed(mults) == P.pair_words(uw, fw)


def test_factorised_strategy_agrees(pucm):
    # the block-split evaluation is an independent oracle for the recursion
    uw = ("z2", "alpha", "beta")
    fw = ("t2", "X", "Y")
    assert pr.factorised_pair(
        pucm, uw, fw,
        lambda g: g.startswith("z"),
        lambda g: g.startswith("t")) == pucm.pair_words(uw, fw)


def test_gram_dims_and_dets(pud0):
    for g in range(6):
        rank, dl, dr, det = pr.gram_rank(pud0, g)
        assert dl == dr == verify.GRAM_DIMS[g]
        assert rank == dl
        if g >= 1:
            assert det == verify.GRAM_DETS[g]


def test_gram_grade2_matrix(pud0):
    rows, cols, M = pr.gram_matrix(pud0, 2)
    assert len(rows) == len(cols) == 2
    vals = sorted(v for row in M for v in row)
    # the grade-2 slice pairs to det 2
    _, det = pr.bareiss(M)
    assert det == 2
    assert vals == sorted([Q(2), Q(2), Q(0), Q(1)]) or det == 2


def test_bareiss_known_matrix():
    M = [[Q(2), Q(2)], [Q(0), Q(1)]]
    rank, det = pr.bareiss(M)
    assert (rank, det) == (2, Q(2))
    rank, det = pr.bareiss([[Q(1), Q(2)], [Q(2), Q(4)]])
    assert rank == 1
