"""The matched pair of Lie algebras, its double, and the group-level
factorisation checks."""
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfkit import liematched as lm
from hopfkit.core import NCPoly


def test_matched_conditions():
    assert lm.check_matched(lm.matched_pair()) is None


def test_double_is_sl2():
    dbl = lm.build_double(lm.matched_pair())
    assert dbl.check_jacobi() is None
    images = lm.iso_to_sl2(dbl)
    assert images == {"X": {"E": Q(1)}, "Y": {"H": Q(1, 2)},
                      "z": {"F": Q(-1)}}


def test_broken_pair_rejected():
    M = lm.matched_pair()
    M.left[("z", "Y")] = {"X": Q(1)}  # corrupt the left action
    assert lm.check_matched(M) is not None
    with pytest.raises(lm.NotMatched):
        lm.build_double(M)


def test_no_iso_for_abelian():
    ab = lm.LieAlgebra("abelian3", ["a", "b", "c"], {})
    with pytest.raises(lm.NoIso):
        lm.iso_to_sl2(ab)


def test_no_iso_for_open_brackets():
    g = lm.LieAlgebra("open", ["a", "b", "c"],
                      {("a", "b"): {"d": Q(1)}})
    with pytest.raises(lm.NoIso):
        lm.iso_to_sl2(g)


def test_translation_map_values():
    f = lm.f_map
    assert f(NCPoly.gen("X")).terms == {("Y",): Q(2)}
    assert not f(NCPoly.gen("Y")).terms
    yx = NCPoly({("Y", "X"): Q(1)})
    xy = NCPoly({("X", "Y"): Q(1)})
    assert f(yx - xy).terms == {("Y",): Q(2)}


def test_actions_from_translation_map():
    assert lm.left_lie_action_from_f() == {"X": {"Y": Q(2)}, "Y": {}}
    assert lm.right_lie_action_adjoint() == {"X": {}, "Y": {"z": Q(1)}}


def test_singular_sample_rejected():
    with pytest.raises(lm.SingularSample):
        lm.act_group_left(Q(1), Q(1), Q(1))  # 1 - bc = 0
    with pytest.raises(lm.SingularSample):
        lm.act_group_left(Q(1), Q(-1), Q(3))  # result a <= 0


def test_group_checks_on_seeded_samples():
    samples = lm.sample_points(120)
    ok, count = lm.group_actions_check(samples)
    assert ok and count >= 100


rationals = st.builds(Q, st.integers(-8, 8), st.integers(1, 5))


@given(rationals, rationals.filter(lambda a: a > 0), rationals)
@settings(max_examples=120, deadline=None)
def test_matrix_identity_random(c, a, b):
    if 1 - b * c <= 0 or a / (1 - b * c) ** 2 <= 0:
        return
    assert lm.check_matrix_identity(c, a, b)
