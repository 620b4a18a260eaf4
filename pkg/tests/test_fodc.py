"""Covariant first-order differential calculi: bimodule checks,
classification, the sub-bimodule obstruction, and the guard rails."""
from fractions import Fraction as Q

import pytest

from hopfkit import family as fam, fodc, verify

LAMS = [Q(1), Q(-1), Q(1, 2)]


@pytest.mark.parametrize("lam", LAMS)
def test_canned_calculi_are_bimodules(lam):
    for sp in (fodc.oeckl(lam), fodc.calc_2d(lam), fodc.calc_3d_left(lam),
               fodc.calc_3d_right(lam, Q(0)),
               fodc.calc_3d_right(lam, lam / 2)):
        assert fodc.check_bimodule(sp).ok, sp.name


@pytest.mark.parametrize("lam", LAMS)
def test_2d_classification_unique(lam):
    sols = verify.classify_2d(lam)
    assert len(sols) == 1
    assert fodc.same_tables(sols[0], fodc.calc_2d(lam))


def test_2d_classification_degree_stable():
    a = verify.classify_2d(Q(1), D=3)
    b = verify.classify_2d(Q(1), D=4)
    assert len(a) == len(b) == 1
    assert fodc.same_tables(a[0], b[0])


@pytest.mark.parametrize("lam", LAMS)
def test_3d_extensions_exactly_two(lam):
    sols = verify.classify_3d_extensions(lam)
    assert len(sols) == 2
    want = [fodc.calc_3d_right(lam, Q(0)), fodc.calc_3d_right(lam, lam / 2)]
    for w in want:
        assert any(fodc.same_tables(s, w) for s in sols)
    assert fodc.check_noniso_scaling_dt(sols[0], sols[1])


def test_3d_extensions_degree_stable():
    a = verify.classify_3d_extensions(Q(1), D=3)
    b = verify.classify_3d_extensions(Q(1), D=4)
    assert len(a) == len(b) == 2
    for s in a:
        assert any(fodc.same_tables(s, t) for t in b)


@pytest.mark.parametrize("lam", LAMS)
def test_bicovariant_scenarios_empty(lam):
    assert verify.classify_3d_bicovariant(lam) == []
    assert verify.classify_4d_bicovariant(lam) == []


@pytest.mark.parametrize("lam", LAMS)
def test_sub_bimodule_obstruction(lam):
    assert fodc.check_4d_sub2d_obstruction(lam)


def test_sub_bimodule_obstruction_vanishes_at_zero():
    assert not fodc.check_4d_sub2d_obstruction(Q(0))


def test_flat_calculus_covariant_only_at_zero():
    sp0 = fodc.oeckl(Q(0))
    _, cov0 = fodc.cov_ubplus_kheis(Q(0))
    rep, wit = fodc.check_covariance(sp0, cov0, "right")
    assert rep.ok and not wit
    for lam in LAMS:
        sp = fodc.oeckl(lam)
        _, cov = fodc.cov_ubplus_kheis(lam)
        rep, wit = fodc.check_covariance(sp, cov, "right")
        assert not rep.ok
        assert set(wit) == {("dX", "X")}
        assert wit[("dX", "X")] == {((), "dX", ("t",)): lam,
                                    ((), "dY", ("t", "t")): lam / 2}


def test_ansatz_too_small_degree():
    K, cov = fodc.cov_kheis_self(Q(1))
    with pytest.raises(fodc.AnsatzTooSmall):
        fodc.classify(K, ("dX", "dY", "dt"), "right", 2, cov)


def test_ansatz_too_small_vs_known():
    K, cov = fodc.cov_kheis_self(Q(1))
    deep = fodc.FODCSpec(
        K, ("dX",),
        {("dX", g): {(("t",) * 4, "dX"): Q(1)} for g in K.generators},
        {"X": {((), "dX"): Q(1)}}, name="deep")
    with pytest.raises(fodc.AnsatzTooSmall):
        fodc.classify(K, ("dX",), "right", 3, cov, known=[deep])


def test_left_3d_calculus_covariant():
    lam = Q(1)
    K, cov = fodc.cov_kheis_self(lam)
    sp = fodc.calc_3d_left(lam)
    rep, wit = fodc.check_covariance(sp, cov, "left")
    assert rep.ok, wit
