"""The algebra family: presentations, the delta/t dictionary, the Hopf
ideal, the Heisenberg quotient, and the scaling isomorphisms."""
from fractions import Fraction as Q

import pytest

from hopfkit import check_hopf_axioms, check_morphism
from hopfkit import family as fam
from hopfkit.core import NCPoly, TruncationOverflow


def test_unknown_tag():
    with pytest.raises(KeyError):
        fam.build("nope", Q(1), 8)


def test_build_all_tags():
    for tag in fam.BUILDERS:
        H = fam.build(tag, Q(1), 6)
        assert H.generators


def test_hcm_commutator(hcm1):
    # [Y, X] = X in normal form: Y X -> X Y + X
    out = hcm1.normalize({("Y", "X"): Q(1)})
    assert out == NCPoly({("X", "Y"): Q(1), ("X",): Q(1)})


def test_hcm_t2_skew_primitive(hcm1):
    d = hcm1.gen_coproduct("t2").terms
    assert d == {(("t2",), ()): Q(1), ((), ("t2",)): Q(1)}


def test_delta_t_dictionary():
    # the two coordinate systems agree: substituting the delta-letters back
    # into the expansion of t_n recovers t_n exactly
    H = fam.build_hcm(Q(1), 8)
    for n in range(2, 8):
        acc = NCPoly()
        for idxs, c in fam.t_expr(n, 8).items():
            p = NCPoly({(): Q(1)})
            for i in idxs:
                p = H.mul(p, fam.delta_expr(i, 8))
            acc = acc + p.scale(c)
        assert acc == NCPoly({(fam.tname(n),): Q(1)})


def test_truncation_overflow():
    H = fam.build_hcm(Q(1), 4)
    with pytest.raises(TruncationOverflow):
        H.normalize({("X", "t4"): Q(1)})


def test_kheis_quotient_morphism(hcm1, kheis1):
    m = fam.heis_quotient_map(hcm1, kheis1)
    assert check_morphism(m).ok


def test_ideal_witness_and_counit(hcm1):
    for n in range(3, 9):
        left, right = fam.heis_ideal_witness(hcm1, n)
        tn = (NCPoly({(fam.tname(n),): Q(1)})
              - hcm1.normalize({("t2",) * (n - 1): Q(1)}))
        assert (left + right).terms == hcm1.coproduct(tn).terms
        assert hcm1.counit(tn) == 0


@pytest.mark.parametrize("lam", [Q(1), Q(-1), Q(1, 2), Q(3)])
def test_scaling_isomorphisms(lam):
    for mk in (fam.hcm_scaling, fam.ucm_scaling):
        f, g = mk(lam, 6)
        assert check_morphism(f).ok
        assert check_morphism(g).ok


def test_lambda_zero_scaling_rejected():
    with pytest.raises(ValueError):
        fam.hcm_scaling(Q(0), 6)
    with pytest.raises(ValueError):
        fam.ucm_scaling(Q(0), 6)


@pytest.mark.parametrize("tag", sorted(fam.BUILDERS))
def test_axioms_small(tag):
    H = fam.build(tag, Q(1, 2), 6)
    assert check_hopf_axioms(H, grade_bound=3).ok
