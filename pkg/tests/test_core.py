"""Exact noncommutative polynomial substrate: ring laws, normal forms,
confluence, and tensor arithmetic."""
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfkit import check_local_confluence
from hopfkit.core import NCPoly, Presentation, RankMismatch, TensorPoly

LETTERS = ("a", "b", "c")
FREE = Presentation(name="free", generators=list(LETTERS), rules={})

words = st.lists(st.sampled_from(LETTERS), max_size=4).map(tuple)
coeffs = st.builds(Q, st.integers(-50, 50), st.integers(1, 10))
polys = st.dictionaries(words, coeffs, max_size=4).map(NCPoly)


@given(polys, polys, polys)
@settings(max_examples=120, deadline=None)
def test_ring_laws(p, q, r):
    mul = FREE.mul
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert mul(mul(p, q), r) == mul(p, mul(q, r))
    assert mul(p, q + r) == mul(p, q) + mul(p, r)
    assert mul(p + q, r) == mul(p, r) + mul(q, r)
    assert p + NCPoly.zero() == p
    assert mul(p, NCPoly.unit()) == p
    assert mul(NCPoly.unit(), p) == p
    assert p - p == NCPoly.zero()


@given(polys, coeffs)
@settings(max_examples=80, deadline=None)
def test_scaling(p, c):
    assert p.scale(c) == FREE.mul(NCPoly.unit(c), p)
    assert c * p == p * c == p.scale(c)
    if c:
        assert p.scale(c) / c == p


def test_zero_coefficients_dropped():
    p = NCPoly({("a",): Q(0), ("b",): Q(1)})
    assert ("a",) not in p.terms
    assert p.coeff(("b",)) == 1
    assert p.coeff(("a",)) == 0


def _weyl():
    # [d, x] = 1: a presentation with a non-homogeneous rule
    return Presentation(name="weyl", generators=["x", "d"],
                        rules={("d", "x"): {("x", "d"): Q(1), (): Q(1)}})


def test_normal_form_weyl():
    W = _weyl()
    # d x = x d + 1, hence d x^2 = x^2 d + 2x
    out = W.normalize({("d", "x", "x"): Q(1)})
    assert out == NCPoly({("x", "x", "d"): Q(1), ("x",): Q(2)})


def test_local_confluence_weyl():
    rep = check_local_confluence(_weyl())
    assert rep.ok


def test_basis_enumeration():
    W = _weyl()
    basis = W.basis(2)
    assert () in basis
    assert ("x", "d") in basis and ("d", "x") not in basis
    assert len(basis) == 6  # 1, x, d, x^2, xd, d^2


@given(polys, polys)
@settings(max_examples=50, deadline=None)
def test_normalize_is_multiplicative(p, q):
    W = Presentation(name="comm3", generators=list(LETTERS),
                     rules={("b", "a"): {("a", "b"): Q(1)},
                            ("c", "a"): {("a", "c"): Q(1)},
                            ("c", "b"): {("b", "c"): Q(1)}})
    assert W.normalize(FREE.mul(p, q)) == W.mul(W.normalize(p), W.normalize(q))


def test_tensor_rank_mismatch():
    W = _weyl()
    t2 = TensorPoly((W, W), {((), ()): Q(1)})
    t3 = TensorPoly((W, W, W), {((), (), ()): Q(1)})
    with pytest.raises(RankMismatch):
        t2 + t3


def test_tensor_normalizes_legs():
    W = _weyl()
    t = TensorPoly((W, W), {(("d", "x"), ()): Q(1)}).normalized()
    assert t.terms == {(("x", "d"), ()): Q(1), ((), ()): Q(1)}
