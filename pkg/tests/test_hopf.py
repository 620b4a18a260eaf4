"""The Hopf axiom checker itself: it must pass on a known Hopf algebra and
flag a corrupted one."""
from fractions import Fraction as Q

import pytest

from hopfkit import check_hopf_axioms, check_inverse_pair, check_morphism
from hopfkit import family as fam
from hopfkit.hopf import AxiomReport, HopfMorphism
from hopfkit.core import NCPoly


def test_axioms_pass_on_primitive_generator():
    U = fam.build_ud0(6)
    rep = check_hopf_axioms(U, grade_bound=3)
    assert rep.ok
    assert rep.checked


def test_axioms_detect_wrong_coproduct():
    bad = fam.build_ud0(6)
    g = bad.generators[0]
    # corrupt: add a non-counital term
    t = dict(bad.coproducts[g].terms)
    t[((), ())] = t.get(((), ()), Q(0)) + Q(1)
    bad.coproducts[g] = type(bad.coproducts[g])(bad.coproducts[g].owners, t)
    bad._cop_cache.clear()
    rep = check_hopf_axioms(bad, grade_bound=2)
    assert not rep.ok
    assert all(detail for _, detail in rep.failures)


def test_axioms_detect_wrong_antipode():
    bad = fam.build_ud0(6)
    g = bad.generators[0]
    bad.antipodes[g] = bad.antipodes[g] + NCPoly({(): Q(1)})
    bad._S_cache.clear()
    rep = check_hopf_axioms(bad, grade_bound=2)
    assert not rep.ok


def test_report_bookkeeping():
    rep = AxiomReport(algebra="demo")
    rep.record("good", True)
    rep.record("bad", False, "witness")
    rep.skip("later", "reason")
    assert not rep.ok
    assert len(rep.checked) == 2
    assert rep.failures == [("bad", "witness")]
    assert rep.skipped == [("later", "reason")]
    assert "demo" in rep.summary()


def test_identity_morphism():
    H = fam.build_hcm(Q(1), 6)
    ident = HopfMorphism(H, H, {g: NCPoly.gen(g) for g in H.generators},
                         name="id")
    assert check_morphism(ident).ok
    assert check_inverse_pair(ident, ident).ok


def test_non_morphism_detected():
    H = fam.build_hcm(Q(1), 6)
    images = {g: NCPoly.gen(g) for g in H.generators}
    images["X"] = NCPoly.gen("X") + NCPoly({(): Q(1)})
    bad = HopfMorphism(H, H, images, name="bad")
    assert not check_morphism(bad).ok
