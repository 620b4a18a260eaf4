"""Hopf-algebra structure on top of a rewriting presentation.

A HopfAlgebra stores coproduct / counit / antipode values on generators and
extends them (multiplicatively, multiplicatively, anti-multiplicatively) to
arbitrary elements.  ``check_hopf_axioms`` machine-verifies every axiom on a
graded slice and additionally checks well-definedness against every rewrite
rule.  Truncation overflows are reported as *skipped*, never as passes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Union

from .core import (NCPoly, Presentation, TensorPoly, TruncationOverflow, Word,
                   ONE_WORD, _as_terms, tensor_mul, tensor_of)


class HopfAlgebra(Presentation):
    """Presentation plus Hopf structure maps given on generators."""

    def __init__(self, name, generators, rules, *, grades=None,
                 coproducts: dict[str, TensorPoly] | None = None,
                 counits: dict[str, Fraction] | None = None,
                 antipodes: dict[str, NCPoly] | None = None,
                 pair_hook=None, letter_hook=None, gen_check=None,
                 truncation=None, lam: Fraction | None = None,
                 cop_hook: Optional[Callable[[str], TensorPoly]] = None,
                 counit_hook: Optional[Callable[[str], Fraction]] = None,
                 antipode_hook: Optional[Callable[[str], NCPoly]] = None,
                 tag: str = ""):
        super().__init__(name=name, generators=list(generators), rules=dict(rules),
                         grades=dict(grades or {}), pair_hook=pair_hook,
                         letter_hook=letter_hook, gen_check=gen_check,
                         truncation=truncation)
        self.lam = lam
        self.tag = tag or name
        self.coproducts: dict[str, TensorPoly] = dict(coproducts or {})
        self.counits: dict[str, Fraction] = {g: Fraction(c) for g, c in (counits or {}).items()}
        self.antipodes: dict[str, NCPoly] = dict(antipodes or {})
        self.cop_hook = cop_hook
        self.counit_hook = counit_hook
        self.antipode_hook = antipode_hook
        self._cop_cache: dict[Word, TensorPoly] = {}
        self._S_cache: dict[Word, NCPoly] = {}

    # -- generator tables ---------------------------------------------------

    def gen_coproduct(self, g: str) -> TensorPoly:
        v = self.coproducts.get(g)
        if v is None and self.cop_hook is not None:
            v = self.cop_hook(g)
        if v is None:
            raise KeyError(f"no coproduct for generator {g!r} in {self.name}")
        return v

    def gen_counit(self, g: str) -> Fraction:
        if g in self.counits:
            return self.counits[g]
        if self.counit_hook is not None:
            v = self.counit_hook(g)
            if v is not None:
                return Fraction(v)
        raise KeyError(f"no counit for generator {g!r} in {self.name}")

    def gen_antipode(self, g: str) -> NCPoly:
        v = self.antipodes.get(g)
        if v is None and self.antipode_hook is not None:
            v = self.antipode_hook(g)
        if v is None:
            raise KeyError(f"no antipode for generator {g!r} in {self.name}")
        return v

    # -- structure maps on elements ------------------------------------------

    @property
    def pair(self) -> tuple[Presentation, Presentation]:
        return (self, self)

    def coproduct_word(self, w: Word) -> TensorPoly:
        cached = self._cop_cache.get(w)
        if cached is not None:
            return cached
        acc = TensorPoly.unit(self.pair)
        for g in w:
            acc = tensor_mul(acc, self.gen_coproduct(g))
        if len(self._cop_cache) < 100_000:
            self._cop_cache[w] = acc
        return acc

    def coproduct(self, x) -> TensorPoly:
        out = TensorPoly(self.pair)
        for w, c in _as_terms(x).items():
            out = out + self.coproduct_word(w).scale(c)
        return out

    def counit(self, x) -> Fraction:
        total = Fraction(0)
        for w, c in _as_terms(x).items():
            prod = Fraction(1)
            for g in w:
                prod *= self.gen_counit(g)
                if not prod:
                    break
            total += c * prod
        return total

    def antipode_word(self, w: Word) -> NCPoly:
        cached = self._S_cache.get(w)
        if cached is not None:
            return cached
        acc = NCPoly.unit()
        for g in reversed(w):
            acc = self.mul(acc, self.gen_antipode(g))
        if len(self._S_cache) < 100_000:
            self._S_cache[w] = acc
        return acc

    def antipode(self, x) -> NCPoly:
        out = NCPoly()
        for w, c in _as_terms(x).items():
            out = out + self.antipode_word(w).scale(c)
        return out

    def iterated_coproduct(self, x, k: int) -> TensorPoly:
        """(Delta (x) id^{n}) ... Delta, k applications: rank k+1 output."""
        cur = tensor_of((self,), self.normalize(x))
        for _ in range(k):
            cur = cur.apply_to_leg(0, self.coproduct_word)
        return cur

    # -- convenience ----------------------------------------------------------

    def element(self, x) -> NCPoly:
        return self.normalize(x)

    def tensor(self, *legs) -> TensorPoly:
        return tensor_of(self.pair, *legs)


@dataclass
class AxiomReport:
    algebra: str
    checked: list[str] = field(default_factory=list)
    failures: list[tuple[str, str]] = field(default_factory=list)
    skipped: list[tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, label: str, condition: bool, detail: str = ""):
        self.checked.append(label)
        if not condition:
            self.failures.append((label, detail))

    def skip(self, label: str, reason: str):
        self.skipped.append((label, reason))

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        s = (f"{status} {self.algebra}: {len(self.checked)} checks, "
             f"{len(self.failures)} failures, {len(self.skipped)} skipped")
        for label, detail in self.failures[:10]:
            s += f"\n  FAIL {label}: {detail}"
        return s


def _counit_leg(H: HopfAlgebra, tp: TensorPoly, leg: int) -> NCPoly:
    """Apply counit to one leg of a rank-2 tensor, returning the other leg."""
    out = NCPoly()
    other = 1 - leg
    for tw, c in tp.terms.items():
        eps = Fraction(1)
        for g in tw[leg]:
            eps *= H.gen_counit(g)
            if not eps:
                break
        if eps:
            out = out + NCPoly({tw[other]: c * eps})
    return out


def _mul_legs(H: HopfAlgebra, tp: TensorPoly) -> NCPoly:
    out = NCPoly()
    for (w1, w2), c in tp.terms.items():
        out = out + NCPoly(H.normalize_word(w1 + w2)).scale(c)
    return out


def check_hopf_axioms(H: HopfAlgebra, grade_bound: int = 3,
                      words: Optional[list[Word]] = None) -> AxiomReport:
    """Verify coassociativity, counit, antipode, and rule well-definedness.

    Coassociativity / counit / antipode axioms are checked on every
    normal-form word of weight <= grade_bound (or on `words` if given);
    multiplicativity of the coproduct/counit and anti-multiplicativity of the
    antipode are checked against every rewrite rule of the presentation.
    """
    rep = AxiomReport(algebra=H.name)
    basis = words if words is not None else H.basis(grade_bound)

    for w in basis:
        label = "*".join(w) if w else "1"
        try:
            d = H.coproduct_word(w)
            # coassociativity
            left = d.apply_to_leg(0, H.coproduct_word)
            right = d.apply_to_leg(1, H.coproduct_word)
            rep.record(f"coassoc[{label}]", left == right,
                       f"(Delta x id)Delta != (id x Delta)Delta on {label}")
            # counit axiom both sides
            lc = _counit_leg(H, d, 0)
            rc = _counit_leg(H, d, 1)
            wnf = NCPoly(H.normalize_word(w))
            rep.record(f"counit[{label}]", lc == wnf and rc == wnf,
                       f"(eps x id)Delta or (id x eps)Delta != id on {label}")
            # antipode axiom both sides
            target = NCPoly.unit(H.counit(NCPoly({w: Fraction(1)})))
            sl = _mul_legs(H, d.map_leg(0, H.antipode_word))
            sr = _mul_legs(H, d.map_leg(1, H.antipode_word))
            rep.record(f"antipode[{label}]", sl == target and sr == target,
                       f"m(S x id)Delta or m(id x S)Delta != eps(.)1 on {label}")
        except TruncationOverflow as exc:
            rep.skip(f"axioms[{label}]", str(exc))

    for (g, h), rhs in sorted(H.rules.items()):
        label = f"{g}*{h}"
        try:
            rhs_poly = H.normalize(rhs) if isinstance(rhs, dict) else None
            if rhs_poly is None:
                rep.skip(f"rule[{label}]", "rule beyond truncation")
                continue
            lhs_cop = tensor_mul(H.gen_coproduct(g), H.gen_coproduct(h))
            rep.record(f"rule-cop[{label}]", lhs_cop == H.coproduct(rhs_poly),
                       f"Delta({label}) != Delta(rhs)")
            rep.record(f"rule-counit[{label}]",
                       H.gen_counit(g) * H.gen_counit(h) == H.counit(rhs_poly),
                       f"eps({label}) != eps(rhs)")
            lhs_S = H.mul(H.gen_antipode(h), H.gen_antipode(g))
            rep.record(f"rule-antipode[{label}]", lhs_S == H.antipode(rhs_poly),
                       f"S({label}) != S(rhs)")
        except TruncationOverflow as exc:
            rep.skip(f"rule[{label}]", str(exc))

    return rep


def check_antipode_flip(H: HopfAlgebra, grade_bound: int = 3) -> AxiomReport:
    """Check Delta(S(x)) == (S x S)(flip(Delta(x))) and eps(S(x)) == eps(x)."""
    rep = AxiomReport(algebra=f"{H.name}:S-anticomultiplicative")
    for w in H.basis(grade_bound):
        label = "*".join(w) if w else "1"
        try:
            lhs = H.coproduct(H.antipode_word(w))
            d = H.coproduct_word(w)
            flipped = TensorPoly(H.pair, {(w2, w1): c for (w1, w2), c in d.terms.items()})
            rhs = flipped.map_leg(0, H.antipode_word).map_leg(1, H.antipode_word)
            rep.record(f"S-flip[{label}]", lhs == rhs, "Delta S != (S x S) flip Delta")
            rep.record(f"eps-S[{label}]",
                       H.counit(H.antipode_word(w)) == H.counit(NCPoly({w: Fraction(1)})),
                       "eps S != eps")
        except TruncationOverflow as exc:
            rep.skip(f"S-flip[{label}]", str(exc))
    return rep


def solve_antipode(H: HopfAlgebra, order: list[str]) -> dict[str, NCPoly]:
    """Solve S from Delta and eps by the convolution-inverse recursion.

    For each generator g (in an order where every non-(g (x) 1) first leg of
    Delta(g) only involves already-solved generators),
        S(g) = eps(g) 1 - sum_{first leg != g} S(first) * second.
    """
    solved: dict[str, NCPoly] = dict(H.antipodes)

    def S_word(w: Word) -> NCPoly:
        acc = NCPoly.unit()
        for g in reversed(w):
            s = solved.get(g)
            if s is None:
                s = H.gen_antipode(g)  # table entry or dynamic hook
            acc = H.mul(acc, s)
        return acc

    for g in order:
        if g in solved:
            continue
        d = H.gen_coproduct(g)
        acc = NCPoly.unit(H.gen_counit(g))
        for (w1, w2), c in d.terms.items():
            if w1 == (g,):
                if w2 != ONE_WORD:
                    raise ValueError(
                        f"coproduct of {g} has {g} (x) (non-unit) term; "
                        "recursion order invalid")
                continue
            acc = acc - H.mul(S_word(w1), NCPoly({w2: c}))
        solved[g] = acc
    return solved


@dataclass
class HopfMorphism:
    """Algebra/coalgebra map determined by generator images."""

    source: HopfAlgebra
    target: HopfAlgebra
    images: dict[str, NCPoly]
    name: str = "phi"

    def apply_word(self, w: Word) -> NCPoly:
        acc = NCPoly.unit()
        for g in w:
            img = self.images.get(g)
            if img is None:
                raise KeyError(f"{self.name}: no image for generator {g!r}")
            acc = self.target.mul(acc, img)
        return acc

    def apply(self, x) -> NCPoly:
        out = NCPoly()
        for w, c in _as_terms(x).items():
            out = out + self.apply_word(w).scale(c)
        return out

    def apply_tensor(self, tp: TensorPoly) -> TensorPoly:
        out = TensorPoly(self.target.pair)
        for (w1, w2), c in tp.terms.items():
            out = out + tensor_of(self.target.pair,
                                  self.apply_word(w1), self.apply_word(w2)).scale(c)
        return out


def check_morphism(m: HopfMorphism, check_antipode: bool = True) -> AxiomReport:
    """Verify m is a map of Hopf algebras, on generators and all defining rules."""
    rep = AxiomReport(algebra=f"{m.name}: {m.source.name} -> {m.target.name}")
    S, T = m.source, m.target

    for (g, h), rhs in sorted(S.rules.items()):
        label = f"{g}*{h}"
        try:
            if not isinstance(rhs, dict):
                rep.skip(f"rel[{label}]", "rule beyond truncation")
                continue
            lhs_img = T.mul(m.images[g], m.images[h])
            rep.record(f"rel[{label}]", lhs_img == m.apply(NCPoly(rhs)),
                       "relation not preserved")
        except (TruncationOverflow, KeyError) as exc:
            rep.skip(f"rel[{label}]", str(exc))

    for g in S.generators:
        try:
            lhs = T.coproduct(m.images[g])
            rhs = m.apply_tensor(S.gen_coproduct(g))
            rep.record(f"cop[{g}]", lhs == rhs, "Delta phi != (phi x phi) Delta")
            rep.record(f"counit[{g}]", T.counit(m.images[g]) == S.gen_counit(g),
                       "eps phi != eps")
            if check_antipode:
                rep.record(f"antipode[{g}]",
                           T.antipode(m.images[g]) == m.apply(S.gen_antipode(g)),
                           "S phi != phi S")
        except (TruncationOverflow, KeyError) as exc:
            rep.skip(f"hopf[{g}]", str(exc))
    return rep


def check_inverse_pair(f: HopfMorphism, g: HopfMorphism) -> AxiomReport:
    """Check g(f(x)) = x and f(g(y)) = y on generators."""
    rep = AxiomReport(algebra=f"{f.name} <-> {g.name}")
    for x in f.source.generators:
        try:
            rep.record(f"g.f[{x}]",
                       g.apply(f.images[x]) == f.source.normalize((x,)),
                       "g(f(x)) != x")
        except TruncationOverflow as exc:
            rep.skip(f"g.f[{x}]", str(exc))
    for y in g.source.generators:
        try:
            rep.record(f"f.g[{y}]",
                       f.apply(g.images[y]) == g.source.normalize((y,)),
                       "f(g(y)) != y")
        except TruncationOverflow as exc:
            rep.skip(f"f.g[{y}]", str(exc))
    return rep
