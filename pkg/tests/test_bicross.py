"""Bicrossproduct construction: compatibility conditions, reproduction of
the hand-presented tables, and mutation sensitivity."""
from fractions import Fraction as Q

import pytest

from hopfkit import bicross, verify
from hopfkit import family as fam
from hopfkit.core import NCPoly, TensorPoly


@pytest.mark.parametrize("tag,mk", [
    ("HCM", lambda: bicross.hcm_data(Q(1), 8)),
    ("UCM", lambda: bicross.ucm_data(Q(1), 8)),
    ("KHeis", lambda: bicross.kheis_data(Q(1))),
    ("UHeis", lambda: bicross.uheis_data(Q(1))),
    ("HCMleft", lambda: bicross.hcmleft_data(8)),
])
def test_reproduces_presentation(tag, mk):
    B = bicross.build_bicrossproduct(mk(), tag=tag)
    F = fam.build(tag, Q(1), 8)
    assert bicross.compare_hopf(B, F).ok


@pytest.mark.parametrize("mk", [
    lambda: bicross.hcm_data(Q(1), 8),
    lambda: bicross.ucm_data(Q(1), 8),
    lambda: bicross.uheis_data(Q(1)),
    lambda: bicross.fbplusext_data(Q(1), 8),
])
def test_compatibility(mk):
    assert bicross.check_compatibility(mk()).ok


def test_mutations_detected():
    for tag, mk in verify._bicross_data_map(8).items():
        if tag in ("KHeis", "HCMleft"):
            continue
        data = mk(Q(1))
        n = 0
        for label, bad in verify._mutations(data):
            rep = bicross.check_compatibility(bad)
            assert not rep.ok, f"{tag}/{label} not detected"
            assert any("residual {" in d and "residual {}" not in d
                       for _, d in rep.failures), f"{tag}/{label} no witness"
            n += 1
        assert n >= 3


def test_kheis_action_values():
    data = bicross.kheis_data(Q(1))
    t = NCPoly({("t",): Q(1)})
    X, Y = NCPoly.gen("X"), NCPoly.gen("Y")
    assert bicross.act(data, X, t) == NCPoly({("t", "t"): Q(1, 2)})
    assert bicross.act(data, Y, t) == t


def test_kheis_coaction_value():
    data = bicross.kheis_data(Q(1))
    co = bicross.coact(data, NCPoly.gen("X"))
    assert co.terms == {(("X",), ()): Q(1), (("Y",), ("t",)): Q(1)}


def test_mutated_coaction_breaks_comodule():
    data = bicross.hcm_data(Q(1), 8)
    g = sorted(data.coaction)[0]
    delta = TensorPoly(data.coaction[g].owners, {((), ()): Q(1)})
    bad = bicross.mutate_coaction(data, g, delta)
    assert not bicross.check_compatibility(bad).ok
