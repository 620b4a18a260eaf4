"""First-order differential calculi over U_lam(b+) and the Heisenberg
coordinate algebra: table-driven bimodules of one-forms, Leibniz/bimodule
consistency, covariance checking with exact discrepancy witnesses, and an
exact two-stage classifier that re-derives the uniqueness and
non-existence results for these calculi.

Representation: a one-form element is a left-normal-form combination
``sum b * omega`` stored as ``{(base word, form name): coefficient}``.
Right multiplication by algebra elements is table-driven; the tables are
the unknowns during classification.  Coefficients are rationals for
concrete calculi and sympy expressions during classification, where
covariance and Leibniz compatibility give linear constraints (stage 1,
solved by exact sparse elimination over Q) and bimodule consistency gives
low-degree polynomial constraints on the remaining parameters (stage 2,
solved by sympy).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
import math
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import sympy

from .core import HopfkitError, NCPoly, Word
from .hopf import AxiomReport, HopfAlgebra
from . import family as fam

Q = Fraction

OneForm = Dict[Tuple[Word, str], object]          # b (x) omega
RightTensor = Dict[Tuple[Word, str, Word], object]  # b*omega (x) k
LeftTensor = Dict[Tuple[Word, Word, str], object]   # k (x) b*omega


class InconsistentBimodule(HopfkitError):
    def __init__(self, relation, lhs, rhs):
        self.relation, self.lhs, self.rhs = relation, lhs, rhs
        super().__init__("bimodule inconsistency at %s: %s != %s"
                         % (relation, lhs, rhs))


class AnsatzTooSmall(HopfkitError):
    pass


class Sym:
    """Sparse exact polynomial in named unknowns over Q.

    Monomials are sorted tuples of variable names; scalars embed as the
    empty monomial.  Supports the ring operations needed for constraint
    assembly, far faster than general symbolic expressions.
    """

    __slots__ = ("d",)

    def __init__(self, d: Dict[Tuple[str, ...], Fraction]):
        self.d = d

    @staticmethod
    def var(name: str) -> "Sym":
        return Sym({(name,): Q(1)})

    @staticmethod
    def const(c) -> "Sym":
        c = Q(c)
        return Sym({(): c} if c else {})

    @staticmethod
    def _coerce(x) -> "Sym":
        if isinstance(x, Sym):
            return x
        return Sym.const(x)

    def __add__(self, other):
        other = Sym._coerce(other)
        out = dict(self.d)
        for m, c in other.d.items():
            v = out.get(m, Q(0)) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Sym(out)

    __radd__ = __add__

    def __neg__(self):
        return Sym({m: -c for m, c in self.d.items()})

    def __sub__(self, other):
        return self + (-Sym._coerce(other))

    def __rsub__(self, other):
        return Sym._coerce(other) + (-self)

    def __mul__(self, other):
        other = Sym._coerce(other)
        out: Dict[Tuple[str, ...], Fraction] = {}
        for m1, c1 in self.d.items():
            for m2, c2 in other.d.items():
                m = tuple(sorted(m1 + m2))
                v = out.get(m, Q(0)) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return Sym(out)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.d)

    def __eq__(self, other):
        return not (self - Sym._coerce(other))

    def __hash__(self):
        return hash(frozenset(self.d.items()))

    def __repr__(self):
        return "Sym(%r)" % (self.d,)

    @property
    def names(self):
        out = set()
        for m in self.d:
            out.update(m)
        return out

    def degree(self) -> int:
        return max((len(m) for m in self.d), default=0)

    def subs_names(self, vals: Dict[str, Fraction]):
        """Substitute rationals for names; returns Fraction or Sym."""
        out: Dict[Tuple[str, ...], Fraction] = {}
        for m, c in self.d.items():
            rest = []
            for n in m:
                if n in vals:
                    c = c * vals[n]
                else:
                    rest.append(n)
            key = tuple(rest)
            v = out.get(key, Q(0)) + c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        if set(out) <= {()}:
            return out.get((), Q(0))
        return Sym(out)

    def to_sympy(self):
        e = sympy.Integer(0)
        for m, c in self.d.items():
            term = sympy.Rational(c.numerator, c.denominator)
            for n in m:
                term *= sympy.Symbol(n)
            e += term
        return e

    def as_fraction(self) -> Fraction:
        if self.names:
            raise ValueError("non-constant value: %r" % self)
        return self.d.get((), Q(0))


def _add(acc: dict, key, c):
    s = acc.get(key)
    s = c if s is None else s + c
    if (isinstance(s, Sym) and s.d) or (not isinstance(s, Sym) and s):
        acc[key] = s
    else:
        acc.pop(key, None)


def _iszero(c) -> bool:
    if isinstance(c, Sym):
        return not c.d
    if isinstance(c, sympy.Basic):
        return sympy.expand(c) == 0
    return not c


@dataclass
class FODCSpec:
    """A first-order calculus presented by its right-multiplication table.

    ``rmult[(form, gen)]`` is the one-form element ``form * gen``;
    ``dmap[gen]`` is the one-form d(gen), normally the basis form.
    """

    base: HopfAlgebra
    forms: Tuple[str, ...]
    rmult: Dict[Tuple[str, str], OneForm]
    dmap: Dict[str, OneForm]
    name: str = ""

    def form(self, name: str) -> OneForm:
        return {((), name): Q(1)}


# -- arithmetic on one-form elements ----------------------------------------


def rmult_gen(spec: FODCSpec, elem: OneForm, g: str) -> OneForm:
    """(sum b*omega) * g using the table."""
    out: OneForm = {}
    for (bw, eta), e in elem.items():
        for (cw, eta2), c2 in spec.rmult[(eta, g)].items():
            for nw, cn in spec.base.normalize_word(bw + cw).items():
                _add(out, (nw, eta2), e * c2 * cn)
    return out


def rmult_word(spec: FODCSpec, elem: OneForm, w: Word) -> OneForm:
    for g in w:
        elem = rmult_gen(spec, elem, g)
    return elem


def lmul(spec: FODCSpec, poly: NCPoly, elem: OneForm) -> OneForm:
    out: OneForm = {}
    for pw, cp in poly.terms.items():
        for (bw, eta), e in elem.items():
            for nw, cn in spec.base.normalize_word(pw + bw).items():
                _add(out, (nw, eta), cp * e * cn)
    return out


def oneform_scale(elem: OneForm, c) -> OneForm:
    return {k: v * c for k, v in elem.items()}


def oneform_add(a: OneForm, b: OneForm) -> OneForm:
    out = dict(a)
    for k, v in b.items():
        _add(out, k, v)
    return out


def oneform_sub(a: OneForm, b: OneForm) -> OneForm:
    return oneform_add(a, oneform_scale(b, -1))


def d_of(spec: FODCSpec, x) -> OneForm:
    """Leibniz extension of the d-table to arbitrary elements."""
    poly = spec.base.normalize(x if isinstance(x, NCPoly) else
                               NCPoly({tuple(x): Q(1)}))
    out: OneForm = {}
    for w, c in poly.terms.items():
        for i, g in enumerate(w):
            piece = rmult_word(spec, spec.dmap[g], w[i + 1:])
            piece = lmul(spec, NCPoly({w[:i]: Q(1)}), piece)
            out = oneform_add(out, oneform_scale(piece, c))
    return out


# -- consistency -------------------------------------------------------------


def check_bimodule(spec: FODCSpec, raise_on_failure: bool = False) -> AxiomReport:
    """(omega*g)*h = omega*(gh) against every base rewrite rule, Leibniz
    well-definedness of d, and the theta convention when theta is present."""
    rep = AxiomReport(algebra="fodc-bimodule:%s" % spec.name)
    rules = [(k, NCPoly(v)) for k, v in spec.base.rules.items()
             if isinstance(v, dict)]
    for eta in spec.forms:
        unit = spec.form(eta)
        for (g, h), rhs in rules:
            lhs = rmult_word(spec, unit, (g, h))
            rv: OneForm = {}
            for w, c in rhs.terms.items():
                rv = oneform_add(rv, oneform_scale(rmult_word(spec, unit, w), c))
            ok = all(_iszero(v) for v in oneform_sub(lhs, rv).values())
            rep.record("assoc:%s|%s%s" % (eta, g, h), ok, str((lhs, rv)))
            if not ok and raise_on_failure:
                raise InconsistentBimodule((eta, g, h), lhs, rv)
    for (g, h), rhs in rules:
        lhs = oneform_add(rmult_word(spec, spec.dmap[g], (h,)),
                          lmul(spec, NCPoly({(g,): Q(1)}), spec.dmap[h]))
        rv = d_of(spec, rhs)
        ok = all(_iszero(v) for v in oneform_sub(lhs, rv).values())
        rep.record("leibniz:%s%s" % (g, h), ok, str((lhs, rv)))
        if not ok and raise_on_failure:
            raise InconsistentBimodule(("d", g, h), lhs, rv)
    if "theta" in spec.forms:
        th = spec.form("theta")
        for g in spec.base.generators:
            lhs = oneform_sub(rmult_gen(spec, th, g),
                              lmul(spec, NCPoly({(g,): Q(1)}), th))
            ok = all(_iszero(v) for v in
                     oneform_sub(lhs, spec.dmap[g]).values())
            rep.record("theta:%s" % g, ok, str(lhs))
    return rep


# -- covariance ---------------------------------------------------------------


@dataclass
class CovarianceSpec:
    """Coactions of a quantum group K on the base and on the form basis."""

    K: HopfAlgebra
    # right coaction of K on the base: gen -> {(base word, K word): coeff}
    base_right: Optional[Dict[str, Dict[Tuple[Word, Word], Fraction]]] = None
    # right coaction on forms: form -> {form: K poly}
    form_right: Optional[Dict[str, Dict[str, NCPoly]]] = None
    # left coaction of K on the base: gen -> {(K word, base word): coeff}
    base_left: Optional[Dict[str, Dict[Tuple[Word, Word], Fraction]]] = None
    # left coaction on forms: form -> {form: K poly} with the K leg on the left
    form_left: Optional[Dict[str, Dict[str, NCPoly]]] = None
    _rcache: Dict[Word, dict] = field(default_factory=dict, repr=False)
    _lcache: Dict[Word, dict] = field(default_factory=dict, repr=False)


def _coact_base(cov: CovarianceSpec, base: HopfAlgebra, w: Word,
                side: str) -> Dict[Tuple[Word, Word], Fraction]:
    """Multiplicative extension of the base coaction to a word.

    Right side keys are (base word, K word); left side keys are
    (K word, base word).
    """
    cache = cov._rcache if side == "right" else cov._lcache
    hit = cache.get(w)
    if hit is not None:
        return hit
    table = cov.base_right if side == "right" else cov.base_left
    cur = {((), ()): Q(1)}
    for g in w:
        nxt: Dict[Tuple[Word, Word], Fraction] = {}
        for (a1, a2), c1 in cur.items():
            for (b1, b2), c2 in table[g].items():
                if side == "right":
                    bws = base.normalize_word(a1 + b1)
                    kws = cov.K.normalize_word(a2 + b2)
                    for nb, cb in bws.items():
                        for nk, ck in kws.items():
                            _add(nxt, (nb, nk), c1 * c2 * cb * ck)
                else:
                    kws = cov.K.normalize_word(a1 + b1)
                    bws = base.normalize_word(a2 + b2)
                    for nk, ck in kws.items():
                        for nb, cb in bws.items():
                            _add(nxt, (nk, nb), c1 * c2 * ck * cb)
        cur = nxt
    cache[w] = cur
    return cur


def coact_right(spec: FODCSpec, cov: CovarianceSpec, elem: OneForm) -> RightTensor:
    """Delta_R(sum b*omega) = Delta_R(b) * Delta_R(omega)."""
    out: RightTensor = {}
    for (bw, eta), e in elem.items():
        db = _coact_base(cov, spec.base, bw, "right")
        for (b1, k1), c1 in db.items():
            for eta2, kpoly in cov.form_right[eta].items():
                for k2, c2 in kpoly.terms.items():
                    for nk, ck in cov.K.normalize_word(k1 + k2).items():
                        _add(out, (b1, eta2, nk), e * c1 * c2 * ck)
    return out


def coact_left(spec: FODCSpec, cov: CovarianceSpec, elem: OneForm) -> LeftTensor:
    """Delta_L(sum b*omega) = Delta_L(b) * Delta_L(omega)."""
    out: LeftTensor = {}
    for (bw, eta), e in elem.items():
        db = _coact_base(cov, spec.base, bw, "left")
        for (k1, b1), c1 in db.items():
            for eta2, kpoly in cov.form_left[eta].items():
                for k2, c2 in kpoly.terms.items():
                    for nk, ck in cov.K.normalize_word(k1 + k2).items():
                        for (nb, neta), cb in lmul(
                                spec, NCPoly({b1: Q(1)}),
                                {((), eta2): Q(1)}).items():
                            _add(out, (nk, nb, neta), e * c1 * c2 * ck * cb)
    return out


def _right_residual(spec: FODCSpec, cov: CovarianceSpec,
                    eta: str, g: str) -> RightTensor:
    """Delta_R(omega)*Delta_R(g) - Delta_R(omega*g)."""
    lhs = coact_right(spec, cov, rmult_gen(spec, spec.form(eta), g))
    out = {k: -v for k, v in lhs.items()}
    for eta2, kpoly in cov.form_right[eta].items():
        for k2, c2 in kpoly.terms.items():
            for (b, k), cg in cov.base_right[g].items():
                moved = rmult_word(spec, {((), eta2): Q(1)}, b)
                for (bw, eta3), cm in moved.items():
                    for nk, ck in cov.K.normalize_word(k2 + k).items():
                        _add(out, (bw, eta3, nk), c2 * cg * cm * ck)
    return {k: v for k, v in out.items() if not _iszero(v)}


def _left_residual(spec: FODCSpec, cov: CovarianceSpec,
                   eta: str, g: str) -> LeftTensor:
    """Delta_L(omega)*Delta_L(g) - Delta_L(omega*g)."""
    lhs = coact_left(spec, cov, rmult_gen(spec, spec.form(eta), g))
    out = {k: -v for k, v in lhs.items()}
    for eta2, kpoly in cov.form_left[eta].items():
        for k2, c2 in kpoly.terms.items():
            for (k, b), cg in cov.base_left[g].items():
                moved = rmult_word(spec, {((), eta2): Q(1)}, b)
                for (bw, eta3), cm in moved.items():
                    for nk, ck in cov.K.normalize_word(k2 + k).items():
                        _add(out, (nk, bw, eta3), c2 * cg * cm * ck)
    return {k: v for k, v in out.items() if not _iszero(v)}


def _d_compat_residual_right(spec: FODCSpec, cov: CovarianceSpec,
                             g: str) -> RightTensor:
    """Delta_R(d g) - (d (x) id) Delta_R(g)."""
    out = coact_right(spec, cov, spec.dmap[g])
    for (b, k), cg in cov.base_right[g].items():
        for (bw, eta), cd in d_of(spec, NCPoly({b: Q(1)})).items():
            _add(out, (bw, eta, k), -cg * cd)
    return {k: v for k, v in out.items() if not _iszero(v)}


def _d_compat_residual_left(spec: FODCSpec, cov: CovarianceSpec,
                            g: str) -> LeftTensor:
    """Delta_L(d g) - (id (x) d) Delta_L(g)."""
    out = coact_left(spec, cov, spec.dmap[g])
    for (k, b), cg in cov.base_left[g].items():
        for (bw, eta), cd in d_of(spec, NCPoly({b: Q(1)})).items():
            _add(out, (k, bw, eta), -cg * cd)
    return {k: v for k, v in out.items() if not _iszero(v)}


def check_covariance(spec: FODCSpec, cov: CovarianceSpec,
                     side: str) -> Tuple[AxiomReport, dict]:
    """Verify covariance of every (form, generator) pair and of the
    d-table; returns the report and a dict of exact discrepancies."""
    rep = AxiomReport(algebra="fodc-cov-%s:%s" % (side, spec.name))
    witnesses = {}
    for eta in spec.forms:
        for g in spec.base.generators:
            res = (_right_residual if side == "right" else _left_residual)(
                spec, cov, eta, g)
            rep.record("cov:%s|%s" % (eta, g), not res, str(res))
            if res:
                witnesses[(eta, g)] = res
    for g in spec.base.generators:
        res = (_d_compat_residual_right if side == "right"
               else _d_compat_residual_left)(spec, cov, g)
        rep.record("d-compat:%s" % g, not res, str(res))
        if res:
            witnesses[("d", g)] = res
    return rep, witnesses


# -- canned coactions ---------------------------------------------------------


def cov_ubplus_kheis(lam: Fraction) -> Tuple[HopfAlgebra, CovarianceSpec]:
    """Coactions of the Heisenberg coordinate algebra on U_lam(b+) and its
    2-form basis (plus theta, coacted trivially)."""
    lam = Q(lam)
    K = fam.build_kheis(lam)
    one = NCPoly({(): Q(1)})
    t = NCPoly({("t",): Q(1)})
    base_right = {
        "X": {(("X",), ()): Q(1), ((), ("X",)): Q(1), (("Y",), ("t",)): Q(1)},
        "Y": {(("Y",), ()): Q(1), ((), ("Y",)): Q(1)},
    }
    form_right = {
        "dX": {"dX": one, "dY": t},
        "dY": {"dY": one},
        "theta": {"theta": one},
    }
    base_left = {
        "X": {((), ("X",)): Q(1)},
        "Y": {((), ("Y",)): Q(1), (("Y",), ()): Q(1)},
    }
    form_left = {
        "dX": {"dX": one},
        "dY": {"dY": one},
        "theta": {"theta": one},
    }
    return K, CovarianceSpec(K, base_right, form_right, base_left, form_left)


def cov_kheis_self(lam: Fraction) -> Tuple[HopfAlgebra, CovarianceSpec]:
    """The regular coactions of the Heisenberg coordinate algebra on itself
    and the induced coactions on the 3-form basis (plus trivial theta)."""
    lam = Q(lam)
    K = fam.build_kheis(lam)
    one = NCPoly({(): Q(1)})
    t = NCPoly({("t",): Q(1)})
    base_right = {}
    base_left = {}
    for g in K.generators:
        cop = K.gen_coproduct(g)
        base_right[g] = {(l1, l2): c for (l1, l2), c in cop.terms.items()}
        base_left[g] = {(l1, l2): c for (l1, l2), c in cop.terms.items()}
    # (d (x) id) Delta and (id (x) d) Delta on generators
    form_right = {
        "dX": {"dX": one, "dY": t},
        "dY": {"dY": one},
        "dt": {"dt": one},
        "theta": {"theta": one},
    }
    Ypoly = NCPoly({("Y",): Q(1)})
    form_left = {
        "dX": {"dX": one, "dt": Ypoly},
        "dY": {"dY": one},
        "dt": {"dt": one},
        "theta": {"theta": one},
    }
    return K, CovarianceSpec(K, base_right, form_right, base_left, form_left)


# -- canned calculi -----------------------------------------------------------


def _of(base: HopfAlgebra, items: Dict[Tuple[Word, str], Fraction]) -> OneForm:
    out: OneForm = {}
    for (w, eta), c in items.items():
        for nw, cn in base.normalize_word(w).items():
            _add(out, (nw, eta), Q(c) * cn)
    return out


def oeckl(lam: Fraction) -> FODCSpec:
    """The flat 2d calculus over U_lam(b+): [dX, X] = [dX, Y] = [dY, Y-lam] = 0,
    [dY, X] = lam dX."""
    lam = Q(lam)
    B = fam.build_ubplus(lam)
    rm = {
        ("dX", "X"): _of(B, {(("X",), "dX"): Q(1)}),
        ("dX", "Y"): _of(B, {(("Y",), "dX"): Q(1)}),
        ("dY", "X"): _of(B, {(("X",), "dY"): Q(1), ((), "dX"): lam}),
        ("dY", "Y"): _of(B, {(("Y",), "dY"): Q(1), ((), "dY"): lam}),
    }
    dmap = {"X": {((), "dX"): Q(1)}, "Y": {((), "dY"): Q(1)}}
    return FODCSpec(B, ("dX", "dY"), rm, dmap, name="oeckl(lam=%s)" % lam)


def calc_2d(lam: Fraction) -> FODCSpec:
    """The unique right-covariant 2d calculus over U_lam(b+)."""
    lam = Q(lam)
    B = fam.build_ubplus(lam)
    h = lam / 2
    rm = {
        ("dX", "X"): _of(B, {(("X",), "dX"): Q(1)}),
        ("dX", "Y"): _of(B, {(("Y",), "dX"): Q(1), ((), "dX"): -h}),
        ("dY", "X"): _of(B, {(("X",), "dY"): Q(1), ((), "dX"): h}),
        ("dY", "Y"): _of(B, {(("Y",), "dY"): Q(1), ((), "dY"): h}),
    }
    dmap = {"X": {((), "dX"): Q(1)}, "Y": {((), "dY"): Q(1)}}
    return FODCSpec(B, ("dX", "dY"), rm, dmap, name="2d(lam=%s)" % lam)


def calc_3d_left(lam: Fraction) -> FODCSpec:
    """The 3d left-covariant calculus over the Heisenberg coordinate
    algebra."""
    lam = Q(lam)
    B = fam.build_kheis(lam)
    rm = {
        ("dX", "X"): _of(B, {(("X",), "dX"): Q(1), (("X",), "dt"): lam}),
        ("dX", "Y"): _of(B, {(("Y",), "dX"): Q(1)}),
        ("dX", "t"): _of(B, {(("t",), "dX"): Q(1), (("t",), "dt"): lam}),
        ("dY", "X"): _of(B, {(("X",), "dY"): Q(1), ((), "dX"): lam}),
        ("dY", "Y"): _of(B, {(("Y",), "dY"): Q(1), ((), "dY"): lam}),
        ("dY", "t"): _of(B, {(("t",), "dY"): Q(1), ((), "dt"): lam}),
        ("dt", "X"): _of(B, {(("X",), "dt"): Q(1)}),
        ("dt", "Y"): _of(B, {(("Y",), "dt"): Q(1)}),
        ("dt", "t"): _of(B, {(("t",), "dt"): Q(1)}),
    }
    dmap = {g: {((), "d" + g): Q(1)} for g in ("X", "Y", "t")}
    return FODCSpec(B, ("dX", "dY", "dt"), rm, dmap, name="3dL(lam=%s)" % lam)


def calc_3d_right(lam: Fraction, g: Fraction) -> FODCSpec:
    """The 3d right-covariant calculi over the Heisenberg coordinate
    algebra, parametrised by g in {0, lam/2}."""
    lam, g = Q(lam), Q(g)
    B = fam.build_kheis(lam)
    h = lam / 2
    rm = {
        ("dX", "X"): _of(B, {(("X",), "dX"): Q(1)}),
        ("dX", "Y"): _of(B, {(("Y",), "dX"): Q(1), ((), "dX"): -h}),
        ("dX", "t"): _of(B, {(("t",), "dX"): Q(1), (("t",), "dt"): g}),
        ("dY", "X"): _of(B, {(("X",), "dY"): Q(1), ((), "dX"): h}),
        ("dY", "Y"): _of(B, {(("Y",), "dY"): Q(1), ((), "dY"): h}),
        ("dY", "t"): _of(B, {(("t",), "dY"): Q(1), ((), "dt"): g}),
        ("dt", "X"): _of(B, {(("X",), "dt"): Q(1), (("t",), "dt"): g - lam}),
        ("dt", "Y"): _of(B, {(("Y",), "dt"): Q(1), ((), "dt"): g - lam}),
        ("dt", "t"): _of(B, {(("t",), "dt"): Q(1)}),
    }
    dmap = {gg: {((), "d" + gg): Q(1)} for gg in ("X", "Y", "t")}
    return FODCSpec(B, ("dX", "dY", "dt"), rm, dmap,
                    name="3dR(lam=%s,g=%s)" % (lam, g))


# -- classification -----------------------------------------------------------


def _base_words(base: HopfAlgebra, D: int) -> List[Word]:
    return sorted(w for w in base.basis(D) if len(w) <= D)


def _linear_system(exprs: List[object]) -> Tuple[List[Dict], List[str]]:
    """Convert affine Sym expressions to sparse rows {name: Q, 1: Q}."""
    rows = []
    names = set()
    for e in exprs:
        if not isinstance(e, Sym):
            if e:
                return None, []  # constant nonzero: inconsistent
            continue
        row: Dict = {}
        for m, c in e.d.items():
            if len(m) == 0:
                row[1] = row.get(1, Q(0)) + c
            elif len(m) == 1:
                row[m[0]] = row.get(m[0], Q(0)) + c
                names.add(m[0])
            else:
                raise ValueError("non-linear stage-1 term: %s" % (m,))
        row = {k: v for k, v in row.items() if v}
        if row:
            rows.append(row)
    return rows, sorted(names)


def _solve_affine(rows: List[Dict], syms: List[str]):
    """Exact sparse Gaussian elimination.

    Returns None if inconsistent, else a substitution dict mapping every
    name to an affine Sym expression in the free names.
    """
    rows = [dict(r) for r in rows]
    order = {s: i for i, s in enumerate(syms)}
    pivots: Dict[str, Dict] = {}
    for row in rows:
        # reduce by existing pivots
        changed = True
        while changed:
            changed = False
            for s in [k for k in row if k != 1]:
                if s in pivots:
                    c = row.pop(s)
                    for k2, v2 in pivots[s].items():
                        nv = row.get(k2, Q(0)) + c * v2
                        if nv:
                            row[k2] = nv
                        else:
                            row.pop(k2, None)
                    changed = True
                    break
        vars_in = [k for k in row if k != 1]
        if not vars_in:
            if row.get(1):
                return None
            continue
        piv = min(vars_in, key=lambda s: order[s])
        c = row.pop(piv)
        expr_row = {k: v / c for k, v in row.items()}
        # substitute into existing pivot expressions
        for ps, pe in pivots.items():
            if piv in pe:
                pc = pe.pop(piv)
                for k2, v2 in expr_row.items():
                    nv = pe.get(k2, Q(0)) - pc * v2
                    if nv:
                        pe[k2] = nv
                    else:
                        pe.pop(k2, None)
        pivots[piv] = {k: -v for k, v in expr_row.items()}
        # pivot expr: piv = -sum expr_row -> store as mapping term -> coeff
    subst = {}
    for s in syms:
        if s in pivots:
            subst[s] = Sym({(() if k == 1 else (k,)): v
                            for k, v in pivots[s].items() if v})
        else:
            subst[s] = Sym.var(s)
    return subst


def _drop_one(m: Tuple[str, ...], x: str) -> List[str]:
    out = list(m)
    out.remove(x)
    return out


def _poly_subs(e: Sym, name: str, val: Sym) -> Sym:
    out = Sym({})
    for m, c in e.d.items():
        k = m.count(name)
        term = Sym({tuple(x for x in m if x != name): c})
        for _ in range(k):
            term = term * val
        out = out + term
    return out


def _divisors(n: int) -> List[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _rational_roots(e: Sym) -> List[Fraction]:
    """All rational roots of a nonzero univariate polynomial."""
    coeffs: Dict[int, Fraction] = {}
    for m, c in e.d.items():
        coeffs[len(m)] = coeffs.get(len(m), Q(0)) + c
    coeffs = {d: c for d, c in coeffs.items() if c}
    if not coeffs or max(coeffs) == 0:
        return []
    roots: List[Fraction] = []
    if 0 not in coeffs:
        roots.append(Q(0))
        while 0 not in coeffs:
            coeffs = {d - 1: c for d, c in coeffs.items() if d >= 1}
            coeffs = {d: c for d, c in coeffs.items() if c}
    if max(coeffs) == 0:
        return roots
    lcm = 1
    for c in coeffs.values():
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ic = {d: int(c * lcm) for d, c in coeffs.items()}
    deg = max(ic)

    def val(x: Fraction) -> Fraction:
        acc = Q(0)
        for d, c in ic.items():
            acc += c * x ** d
        return acc

    for p in _divisors(ic[0]):
        for q in _divisors(ic[deg]):
            for cand in (Q(p, q), Q(-p, q)):
                if cand not in roots and val(cand) == 0:
                    roots.append(cand)
    return roots


def _solve_zero_dim(eqs: List[object], names: set) -> List[Dict[str, Fraction]]:
    """Enumerate the rational solutions of a small polynomial system.

    Strategy: eliminate with affine equations, branch on rational roots of
    univariate equations, and use equations that are affine in one variable
    with a constant coefficient for substitution.  Raises if a branch is
    solved with free variables remaining (a parametric family).
    """
    live: List[Sym] = []
    for e in eqs:
        if isinstance(e, Sym):
            if e.d:
                if not e.names:
                    return []
                live.append(e)
        elif e:
            return []
    if not live:
        if names:
            raise HopfkitError("classification returned a parametric family")
        return [{}]

    lin = [e for e in live if e.degree() <= 1]
    if lin:
        rows, syms = _linear_system(lin)
        subst = _solve_affine(rows, syms)
        if subst is None:
            return []
        pivots = {n: v for n, v in subst.items() if v.d != {(n,): Q(1)}}
        rest = []
        for e in live:
            if e.degree() <= 1:
                continue
            for n in sorted(set(e.names) & set(pivots)):
                e = _poly_subs(e, n, pivots[n])
            rest.append(e)
        out = []
        for ss in _solve_zero_dim(rest, names - set(pivots)):
            full = dict(ss)
            for n, v in pivots.items():
                r = v.subs_names(ss)
                full[n] = r.as_fraction() if isinstance(r, Sym) else r
            out.append(full)
        return out

    uni = next((e for e in live if len(e.names) == 1), None)
    if uni is not None:
        x = next(iter(uni.names))
        out = []
        for r in _rational_roots(uni):
            rest = [_poly_subs(e, x, Sym.const(r)) for e in live if e is not uni]
            for ss in _solve_zero_dim(rest, names - {x}):
                full = dict(ss)
                full[x] = r
                out.append(full)
        return out

    for e in live:
        for x in sorted(e.names):
            c = e.d.get((x,))
            if c and not any(x in m and m != (x,) for m in e.d):
                val = Sym({m: -cv / c for m, cv in e.d.items() if m != (x,)})
                rest = [_poly_subs(e2, x, val) for e2 in live if e2 is not e]
                out = []
                for ss in _solve_zero_dim(rest, names - {x}):
                    full = dict(ss)
                    r = val.subs_names(ss)
                    full[x] = r.as_fraction() if isinstance(r, Sym) else r
                    out.append(full)
                return out

    # extended linearization: augment with variable multiples, then
    # eliminate monomials highest-degree-first; any surviving combination
    # supported on affine monomials is a new equation
    maxdeg = max(e.degree() for e in live) + 1
    gen = list(live)
    for e in live:
        if e.degree() + 1 <= maxdeg:
            for x in sorted(names):
                gen.append(Sym.var(x) * e)
    monos = sorted({m for e in gen for m in e.d}, key=lambda m: (-len(m), m))
    mrank = {m: i for i, m in enumerate(monos)}
    pivots: Dict[Tuple[str, ...], Dict] = {}
    new_affine: List[Sym] = []
    for e in gen:
        row = dict(e.d)
        while True:
            hit = next((m for m in row if m in pivots), None)
            if hit is None:
                break
            c = row.pop(hit)
            for k2, v2 in pivots[hit].items():
                nv = row.get(k2, Q(0)) - c * v2
                if nv:
                    row[k2] = nv
                else:
                    row.pop(k2, None)
        if not row:
            continue
        deg = max(len(m) for m in row)
        if deg <= 1:
            if Sym(row) not in new_affine:
                new_affine.append(Sym(row))
            continue
        piv = min((m for m in row if len(m) == deg), key=lambda m: mrank[m])
        c = row.pop(piv)
        pivots[piv] = {k: v / c for k, v in row.items()}
    if new_affine:
        return _solve_zero_dim(live + new_affine, names)

    # factor branch: an equation all of whose monomials contain x splits
    # into x = 0 or the cofactor vanishing
    for e in live:
        if e.degree() != 2:
            continue  # the cofactor must be affine so the branch shrinks
        for x in sorted(e.names):
            if all(x in m for m in e.d):
                cof = Sym({tuple(_drop_one(m, x)): c for m, c in e.d.items()})
                out = []
                rest = [_poly_subs(e2, x, Sym({})) for e2 in live]
                for ss in _solve_zero_dim(rest, names - {x}):
                    full = dict(ss)
                    full[x] = Q(0)
                    if full not in out:
                        out.append(full)
                for ss in _solve_zero_dim(live + [cof], names):
                    if ss.get(x) != 0 and ss not in out:
                        out.append(ss)
                return out

    raise HopfkitError(
        "could not reduce the quadratic system: %d equations in %s"
        % (len(live), sorted(names)))


def classify(base: HopfAlgebra, forms: Sequence[str], side: str,
             D: int, cov: CovarianceSpec,
             fixed_entries: Optional[Dict[Tuple[str, str], OneForm]] = None,
             known: Optional[Sequence[FODCSpec]] = None,
             sub_forms: Optional[Sequence[str]] = None,
             ) -> List[FODCSpec]:
    """Exact classification of covariant calculi with the given form basis.

    Stage 1 solves the linear system from covariance, Leibniz
    compatibility, the theta convention, any fixed entries, and (when
    ``sub_forms`` is given) the requirement that the listed forms span a
    sub-bimodule, so the remaining forms carry a quotient calculus; stage 2
    imposes bimodule consistency on the residual parameters and enumerates
    the rational solutions.
    """
    if D < 3:
        raise AnsatzTooSmall("ansatz degree must be at least 3")
    forms = tuple(forms)
    words = _base_words(base, D)
    theta = "theta" in forms
    unknown_forms = [f for f in forms if f != "theta"]
    table: Dict[Tuple[str, str], OneForm] = {}
    for eta in unknown_forms:
        for g in base.generators:
            entry: OneForm = {}
            for w in words:
                for eta2 in forms:
                    name = ("c_%s_%s_%s_%s"
                            % (eta, g, eta2, "_".join(w) or "1"))
                    entry[(w, eta2)] = Sym.var(name)
            table[(eta, g)] = entry
    dmap = {g: {((), "d" + g): Q(1)} for g in base.generators}
    if theta:
        # theta * g = g * theta + dg
        for g in base.generators:
            table[("theta", g)] = {((g,), "theta"): Q(1), ((), "d" + g): Q(1)}
    spec = FODCSpec(base, forms, table, dmap, name="ansatz")

    if known is not None:
        for ks in known:
            for (eta, g), entry in ks.rmult.items():
                for (w, eta2), c in entry.items():
                    if len(w) > D and not _iszero(c):
                        raise AnsatzTooSmall(
                            "known table coefficient %s*%s has degree %d > %d"
                            % (eta, g, len(w), D))

    exprs: List[object] = []
    sides = ("right", "left") if side == "bi" else (side,)
    for sd in sides:
        resfun = _right_residual if sd == "right" else _left_residual
        dfun = (_d_compat_residual_right if sd == "right"
                else _d_compat_residual_left)
        for eta in forms:
            for g in base.generators:
                exprs.extend(resfun(spec, cov, eta, g).values())
        for g in base.generators:
            exprs.extend(dfun(spec, cov, g).values())
    # Leibniz compatibility with base rules (linear in the unknowns)
    rules = [(k, NCPoly(v)) for k, v in base.rules.items()
             if isinstance(v, dict)]
    for (g, h), rhs in rules:
        lhs = oneform_add(rmult_word(spec, spec.dmap[g], (h,)),
                          lmul(spec, NCPoly({(g,): Q(1)}), spec.dmap[h]))
        exprs.extend(oneform_sub(lhs, d_of(spec, rhs)).values())
    if fixed_entries:
        for key, target in fixed_entries.items():
            exprs.extend(oneform_sub(table[key], target).values())
    if sub_forms:
        keep = set(sub_forms)
        for eta in keep & set(unknown_forms):
            for g in base.generators:
                for (w, eta2), c in table[(eta, g)].items():
                    if eta2 not in keep:
                        exprs.append(c)

    rows, syms = _linear_system(exprs)
    if rows is None:
        return []
    subst = _solve_affine(rows, syms)
    if subst is None:
        return []
    # substituted (stage-1) table
    stage1: Dict[Tuple[str, str], OneForm] = {}
    for key, entry in table.items():
        out: OneForm = {}
        for k, c in entry.items():
            if isinstance(c, Sym) and c.degree() == 1 and len(c.d) == 1:
                (name,), coeff = next(iter(c.d.items()))
                c2 = subst.get(name, c)
                if coeff != 1:
                    c2 = coeff * c2
            else:
                c2 = c
            if not _iszero(c2):
                out[k] = c2
        stage1[key] = out
    spec1 = FODCSpec(base, forms, stage1, dmap, name="stage1")
    params = sorted({n for entry in stage1.values() for c in entry.values()
                     if isinstance(c, Sym) for n in c.names})

    # stage 2: bimodule consistency on the defining relations plus the
    # overlap words (a,b,c) with rules at both (a,b) and (b,c), whose
    # confluence conditions do not follow from the pair conditions
    rule_keys = {k for k, _ in rules}
    overlap = [(a, b, c) for (a, b) in rule_keys for c in base.generators
               if (b, c) in rule_keys]
    eqs = []
    for eta in forms:
        unit = spec1.form(eta)
        for w in list(rule_keys) + overlap:
            lhs = rmult_word(spec1, unit, w)
            rv: OneForm = {}
            for v, c in base.normalize_word(w).items():
                rv = oneform_add(rv, oneform_scale(
                    rmult_word(spec1, unit, v), c))
            for v in oneform_sub(lhs, rv).values():
                if not _iszero(v):
                    eqs.append(v)
    if not params:
        return [] if eqs else [_freeze(spec1)]
    out: List[FODCSpec] = []
    for vals in _solve_zero_dim(eqs, set(params)):
        tab: Dict[Tuple[str, str], OneForm] = {}
        for key, entry in stage1.items():
            e2: OneForm = {}
            for k, c in entry.items():
                cv = c.subs_names(vals) if isinstance(c, Sym) else c
                if isinstance(cv, Sym):
                    cv = cv.as_fraction()
                if cv:
                    e2[k] = Q(cv)
            tab[key] = e2
        cand = FODCSpec(base, forms, tab, dmap, name="classified")
        if cand not in out and check_bimodule(cand).ok:
            out.append(cand)
    out.sort(key=lambda s: sorted((k, sorted(v.items()))
                                  for k, v in s.rmult.items()).__repr__())
    return out


def _freeze(spec: FODCSpec) -> FODCSpec:
    tab = {}
    for key, entry in spec.rmult.items():
        e2 = {}
        for k, c in entry.items():
            cv = c.as_fraction() if isinstance(c, Sym) else Q(c)
            if cv:
                e2[k] = cv
        tab[key] = e2
    return FODCSpec(spec.base, spec.forms, tab, spec.dmap, name="classified")


def same_tables(a: FODCSpec, b: FODCSpec) -> bool:
    keys = set(a.rmult) | set(b.rmult)
    for k in keys:
        if oneform_sub(a.rmult.get(k, {}), b.rmult.get(k, {})):
            diff = {kk: v for kk, v in
                    oneform_sub(a.rmult.get(k, {}), b.rmult.get(k, {})).items()
                    if not _iszero(v)}
            if diff:
                return False
    return True


def check_noniso_scaling_dt(a: FODCSpec, b: FODCSpec) -> bool:
    """True when no basis change fixing dX, dY and scaling dt by a nonzero
    constant carries a's table to b's."""
    c = sympy.Symbol("c")
    scale = {"dX": sympy.Integer(1), "dY": sympy.Integer(1), "dt": c}
    eqs = []
    for (eta, g), entry in a.rmult.items():
        # phi(eta * g) = phi(eta) * g   with phi(omega) = scale * omega
        lhs = {k: scale[eta] * v for k, v in entry.items()}
        rhs = {k: scale[k[1]] * v for k, v in b.rmult[(eta, g)].items()}
        for k in set(lhs) | set(rhs):
            e = sympy.expand(lhs.get(k, 0) - rhs.get(k, 0))
            if e != 0:
                eqs.append(e)
    if not eqs:
        return False
    sols = sympy.solve(eqs, [c], dict=True)
    return all(sol.get(c, 0) == 0 for sol in sols)

# -- the scalar-parametrised 4d right-covariant shape family ------------------


def four_dim_shape_family(lam: Fraction):
    """The general 4d right-covariant relation table over the Heisenberg
    coordinate algebra with basis {dX, dY, dt, theta}, theta central up to d,
    parametrised by scalar unknowns.  Returned as an FODCSpec whose
    coefficients are affine symbols, suitable for imposing linear entry
    constraints."""
    lam = Q(lam)
    B = fam.build_kheis(lam)
    h = lam / 2
    S = {n: Sym.var(n) for n in
         ("a1", "a2", "a3", "a4", "e1", "e2", "e3", "e4",
          "f1", "f2", "f3", "f4", "g1", "g2", "g3", "g4",
          "c1", "c2", "c3", "c4", "k1", "k2", "k3", "k4")}
    a1, a2, a3, a4 = (S[n] for n in ("a1", "a2", "a3", "a4"))
    e1, e2, e3, e4 = (S[n] for n in ("e1", "e2", "e3", "e4"))
    f1, f2, f3, f4 = (S[n] for n in ("f1", "f2", "f3", "f4"))
    g1, g2, g3, g4 = (S[n] for n in ("g1", "g2", "g3", "g4"))
    c1, c2, c3, c4 = (S[n] for n in ("c1", "c2", "c3", "c4"))
    k1, k2, k3, k4 = (S[n] for n in ("k1", "k2", "k3", "k4"))

    W = lambda *names: tuple(names)
    one, t, t2, t3 = W(), W("t"), W("t", "t"), W("t", "t", "t")

    def entry(**cols):
        out = {}
        for eta2, terms in cols.items():
            key = {"dX": "dX", "dY": "dY", "dt": "dt", "th": "theta"}[eta2]
            for w, c in terms:
                if not _iszero(c):
                    _add(out, (w, key), c)
        return out

    X, Y = W("X"), W("Y")
    tab = {
        ("dX", "X"): entry(
            dX=[(X, Q(1)), (t2, f1), (t, lam - 2 * e1), (one, a1)],
            dY=[(t3, -f1), (t2, f2 - h), (t, 2 * e1 - a1), (one, a2)],
            dt=[(t2, f3), (t, 2 * e3), (one, a3)],
            th=[(t2, f4), (one, a4)]),
        ("dX", "Y"): entry(
            dX=[(Y, Q(1)), (t, f1), (one, e1 - lam)],
            dY=[(t2, -f1), (t, f2 - e1), (one, e2)],
            dt=[(t, f3), (one, e3)],
            th=[(t, f4), (one, e4)]),
        ("dX", "t"): entry(
            dX=[(t, 1 + g1), (one, c1 + h * k1)],
            dY=[(t2, -g1), (t, g2 - c1 - h * k1), (one, c2 + h * k2)],
            dt=[(t, g3), (one, c3 + h * k3)],
            th=[(t, g4), (one, c4 + h * k4)]),
        ("dY", "X"): entry(
            dX=[(t, f1), (one, e1)],
            dY=[(X, Q(1)), (t2, -f1), (t, f2 - e1), (one, e2)],
            dt=[(t, f3), (one, e3)],
            th=[(t, f4), (one, e4)]),
        ("dY", "Y"): entry(
            dX=[(one, f1)],
            dY=[(Y, Q(1)), (t, -f1), (one, f2)],
            dt=[(one, f3)],
            th=[(one, f4)]),
        ("dY", "t"): entry(
            dX=[(one, g1)],
            dY=[(t, 1 - g1), (one, g2)],
            dt=[(one, g3)],
            th=[(one, g4)]),
        ("dt", "X"): entry(
            dX=[(t, g1), (one, c1)],
            dY=[(t2, -g1), (t, g2 - c1), (one, c2)],
            dt=[(X, Q(1)), (t, g3 - lam), (one, c3)],
            th=[(t, g4), (one, c4)]),
        ("dt", "Y"): entry(
            dX=[(one, g1)],
            dY=[(t, -g1), (one, g2)],
            dt=[(Y, Q(1)), (one, g3 - lam)],
            th=[(one, g4)]),
        ("dt", "t"): entry(
            dX=[(one, k1)],
            dY=[(t, -k1), (one, k2)],
            dt=[(t, Q(1)), (one, k3)],
            th=[(one, k4)]),
    }
    for g in B.generators:
        tab[("theta", g)] = {((g,), "theta"): Q(1), ((), "d" + g): Q(1)}
    dmap = {g: {((), "d" + g): Q(1)} for g in B.generators}
    return FODCSpec(B, ("dX", "dY", "dt", "theta"), tab, dmap,
                    name="4d-right-shape(lam=%s)" % lam)


def check_4d_sub2d_obstruction(lam: Fraction) -> bool:
    """True when forcing (dX)X = X dX inside the scalar-parametrised 4d
    right-covariant family is linearly inconsistent (so no member of the
    family contains the flat entry, hence none contains the unique 2d
    calculus as a sub-bimodule with its table intact)."""
    spec = four_dim_shape_family(lam)
    target: OneForm = {(("X",), "dX"): Q(1)}
    exprs = list(oneform_sub(spec.rmult[("dX", "X")], target).values())
    rows, syms = _linear_system(exprs)
    if rows is None:
        return True
    return _solve_affine(rows, syms) is None
