"""Module-algebra actions and their dual coactions."""
from fractions import Fraction as Q

import pytest

from hopfkit import schrodinger as sch


@pytest.fixture(scope="module")
def d_ucm():
    return sch.ucm_on_ubplus(8)


@pytest.fixture(scope="module")
def d_heis():
    return sch.uheis_on_ubplus(Q(2))


def test_module_algebra(d_ucm, d_heis):
    assert sch.check_module_algebra(d_ucm, grade_bound=4).ok
    assert sch.check_module_algebra(d_heis, grade_bound=4).ok


def test_comodule(d_ucm, d_heis):
    assert sch.check_comodule(d_ucm).ok
    assert sch.check_comodule(d_heis).ok


def test_action_coaction_duality(d_ucm, d_heis):
    assert sch.check_action_coaction_duality(d_ucm).ok
    assert sch.check_action_coaction_duality(d_heis).ok


def test_quotient_restriction():
    assert sch.check_quotient_restriction().ok


@pytest.mark.parametrize("lam", [Q(1), Q(-1), Q(1, 2)])
def test_scaling_consistency(lam):
    assert sch.check_scaling_consistency(lam).ok


def test_pairing_translation_duality():
    assert sch.check_pairing_translation_duality(8).ok


def test_zero_parameter_rejected():
    with pytest.raises(ValueError):
        sch.uheis_on_ubplus(Q(0))
