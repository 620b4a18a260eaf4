"""Exact noncommutative polynomial arithmetic over Q.

Elements live in a free algebra on a finite alphabet of named generators,
reduced to normal form by a confluent two-letter rewriting system.  All
coefficients are ``fractions.Fraction``; nothing in this module (or anywhere
downstream of it) touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Optional, Union

Word = tuple[str, ...]
Coeff = Union[Fraction, int]

ONE_WORD: Word = ()


class HopfkitError(Exception):
    """Base class for all package errors."""


class TruncationOverflow(HopfkitError):
    """A rewrite needed a generator beyond the configured truncation bound.

    Raised loudly instead of silently dropping terms: a computation that
    would leave the truncated alphabet is not a computation we can certify.
    """

    def __init__(self, generator: str, bound: int):
        self.generator = generator
        self.bound = bound
        super().__init__(
            f"rewrite requires generator {generator!r} beyond truncation "
            f"bound N={bound}; rerun with a larger N"
        )


class UnknownGenerator(HopfkitError):
    def __init__(self, name: str, presentation: "Presentation"):
        super().__init__(f"unknown generator {name!r} in {presentation.name}")


class RankMismatch(HopfkitError):
    """Tensor operands have different rank or different leg owners."""


class _Overflow:
    """Sentinel rule value: applying this rule exceeds the truncation."""

    __slots__ = ("generator", "bound")

    def __init__(self, generator: str, bound: int):
        self.generator = generator
        self.bound = bound


def _as_terms(x) -> dict[Word, Fraction]:
    """Coerce x (NCPoly, dict, word, generator name, scalar) to a term dict."""
    if isinstance(x, NCPoly):
        return dict(x.terms)
    if isinstance(x, dict):
        return {w: Fraction(c) for w, c in x.items() if c}
    if isinstance(x, tuple):
        return {x: Fraction(1)}
    if isinstance(x, str):
        return {(x,): Fraction(1)}
    if isinstance(x, (int, Fraction)):
        return {ONE_WORD: Fraction(x)} if x else {}
    raise TypeError(f"cannot interpret {x!r} as a polynomial")


class NCPoly:
    """Immutable-by-convention linear combination of words."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Word, Coeff]] = None):
        self.terms: dict[Word, Fraction] = {}
        if terms:
            for w, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[w] = c

    @staticmethod
    def zero() -> "NCPoly":
        return NCPoly()

    @staticmethod
    def unit(c: Coeff = 1) -> "NCPoly":
        return NCPoly({ONE_WORD: Fraction(c)})

    @staticmethod
    def gen(name: str) -> "NCPoly":
        return NCPoly({(name,): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = NCPoly.unit(other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> "NCPoly":
        out = dict(self.terms)
        for w, c in _as_terms(other).items():
            nc = out.get(w, Fraction(0)) + c
            if nc:
                out[w] = nc
            else:
                out.pop(w, None)
        return NCPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "NCPoly":
        return NCPoly({w: -c for w, c in self.terms.items()})

    def __sub__(self, other) -> "NCPoly":
        return self + (-(other if isinstance(other, NCPoly) else NCPoly(_as_terms(other))))

    def __rsub__(self, other) -> "NCPoly":
        return (-self) + other

    def scale(self, c: Coeff) -> "NCPoly":
        c = Fraction(c)
        if not c:
            return NCPoly()
        return NCPoly({w: c * k for w, k in self.terms.items()})

    def __mul__(self, other) -> "NCPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other) -> "NCPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other) -> "NCPoly":
        return self.scale(Fraction(1, 1) / Fraction(other))

    def coeff(self, word: Word) -> Fraction:
        return self.terms.get(word, Fraction(0))

    def sorted_terms(self) -> list[tuple[Word, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            ws = "*".join(w) if w else "1"
            parts.append(f"{c}{'*' + ws if w else ''}" if c != 1 or not w else ws)
        return " + ".join(parts)


RuleValue = Union[dict, "NCPoly", _Overflow]


@dataclass
class Presentation:
    """A unital associative algebra with a two-letter rewriting system.

    ``generators`` are listed in normal order.  ``rules`` maps an adjacent
    pair (g, h) to its replacement polynomial; a word is in normal form when
    no adjacent pair has a rule.  ``pair_hook`` supplies dynamic rules for
    open generator families (e.g. group-likes indexed by a rational); it
    returns a term dict, an ``_Overflow`` sentinel, or None.  ``letter_hook``
    rewrites single letters (e.g. an index-0 group-like to 1).
    """

    name: str
    generators: list[str]
    rules: dict[tuple[str, str], RuleValue] = field(default_factory=dict)
    grades: dict[str, int] = field(default_factory=dict)
    pair_hook: Optional[Callable[[str, str], Optional[RuleValue]]] = None
    letter_hook: Optional[Callable[[str], Optional[RuleValue]]] = None
    gen_check: Optional[Callable[[str], bool]] = None
    truncation: Optional[int] = None
    commutative: bool = False

    def __post_init__(self):
        self._genset = set(self.generators)
        norm_rules = {}
        for k, v in self.rules.items():
            if isinstance(v, (_Overflow,)):
                norm_rules[k] = v
            else:
                norm_rules[k] = _as_terms(v)
        self.rules = norm_rules
        self._nf_cache: dict[Word, dict[Word, Fraction]] = {}

    # -- generator bookkeeping -------------------------------------------

    def has_gen(self, name: str) -> bool:
        if name in self._genset:
            return True
        if self.gen_check is not None and self.gen_check(name):
            return True
        return False

    def check_word(self, w: Word) -> None:
        for g in w:
            if not self.has_gen(g):
                raise UnknownGenerator(g, self)

    def grade_of_gen(self, g: str) -> int:
        return self.grades.get(g, 1)

    def grade_of_word(self, w: Word) -> int:
        return sum(self.grade_of_gen(g) for g in w)

    def weight_of_word(self, w: Word) -> int:
        """Basis-enumeration weight: grade, but grade-0 letters count 1."""
        return sum(max(self.grade_of_gen(g), 1) for g in w)

    def grade(self, x) -> Union[int, str]:
        """Common grade of all words of x, or 'inhomogeneous'."""
        terms = _as_terms(x)
        gs = {self.grade_of_word(w) for w in terms}
        if not gs:
            return 0
        if len(gs) == 1:
            return gs.pop()
        return "inhomogeneous"

    # -- rewriting ---------------------------------------------------------

    def rule_for(self, g: str, h: str) -> Optional[dict[Word, Fraction]]:
        v = self.rules.get((g, h))
        if v is None and self.pair_hook is not None:
            v = self.pair_hook(g, h)
            if isinstance(v, dict):
                v = {w: Fraction(c) for w, c in v.items() if c}
        if v is None:
            return None
        if isinstance(v, _Overflow):
            raise TruncationOverflow(v.generator, v.bound)
        return v

    def letter_rule(self, g: str) -> Optional[dict[Word, Fraction]]:
        if self.letter_hook is None:
            return None
        v = self.letter_hook(g)
        if v is None:
            return None
        if isinstance(v, _Overflow):
            raise TruncationOverflow(v.generator, v.bound)
        return {w: Fraction(c) for w, c in v.items() if c}

    def _reduce_once(self, w: Word):
        """Return (position, rule, is_letter) of the leftmost redex, or None."""
        if self.letter_hook is not None:
            for i, g in enumerate(w):
                r = self.letter_rule(g)
                if r is not None:
                    return i, r, True
        for i in range(len(w) - 1):
            r = self.rule_for(w[i], w[i + 1])
            if r is not None:
                return i, r, False
        return None

    def normalize_word(self, w: Word) -> dict[Word, Fraction]:
        self.check_word(w)
        cached = self._nf_cache.get(w)
        if cached is not None:
            return dict(cached)
        out: dict[Word, Fraction] = {}
        stack: list[tuple[Word, Fraction]] = [(w, Fraction(1))]
        while stack:
            word, c = stack.pop()
            red = self._reduce_once(word)
            if red is None:
                nc = out.get(word, Fraction(0)) + c
                if nc:
                    out[word] = nc
                else:
                    out.pop(word, None)
                continue
            i, rule, is_letter = red
            tail = i + 1 if is_letter else i + 2
            for rw, rc in rule.items():
                stack.append((word[:i] + rw + word[tail:], c * rc))
        if len(self._nf_cache) < 200_000:
            self._nf_cache[w] = dict(out)
        return out

    def normalize(self, x) -> NCPoly:
        out: dict[Word, Fraction] = {}
        for w, c in _as_terms(x).items():
            for nw, nc in self.normalize_word(w).items():
                s = out.get(nw, Fraction(0)) + c * nc
                if s:
                    out[nw] = s
                else:
                    out.pop(nw, None)
        return NCPoly(out)

    def mul(self, a, b) -> NCPoly:
        ta, tb = _as_terms(a), _as_terms(b)
        out: dict[Word, Fraction] = {}
        for wa, ca in ta.items():
            for wb, cb in tb.items():
                for nw, nc in self.normalize_word(wa + wb).items():
                    s = out.get(nw, Fraction(0)) + ca * cb * nc
                    if s:
                        out[nw] = s
                    else:
                        out.pop(nw, None)
        return NCPoly(out)

    def mul_many(self, *factors) -> NCPoly:
        acc = NCPoly.unit()
        for f in factors:
            acc = self.mul(acc, f)
        return acc

    def is_normal_word(self, w: Word) -> bool:
        return self._reduce_once(w) is None

    # -- basis enumeration --------------------------------------------------

    def basis(self, weight_bound: int) -> list[Word]:
        """All normal-form words of weight <= weight_bound, sorted."""
        out: list[Word] = []

        def extend(word: Word, weight: int):
            out.append(word)
            for g in self.generators:
                wg = max(self.grade_of_gen(g), 1)
                if weight + wg > weight_bound:
                    continue
                if self.letter_hook is not None and self.letter_rule(g) is not None:
                    continue
                if word and self.rule_for(word[-1], g) is not None:
                    continue
                extend(word + (g,), weight + wg)

        extend(ONE_WORD, 0)
        return sorted(out, key=lambda w: (self.weight_of_word(w), len(w), w))

    # -- confluence ----------------------------------------------------------

    def confluence_overlaps(self) -> list[Word]:
        """Three-letter overlap words (a,b,c) with rules on (a,b) and (b,c)."""
        keys = sorted(self.rules.keys())
        by_first: dict[str, list[str]] = {}
        for (a, b) in keys:
            by_first.setdefault(a, []).append(b)
        out = []
        for (a, b) in keys:
            for c in by_first.get(b, ()):
                out.append((a, b, c))
        return out


@dataclass
class ConfluenceReport:
    checked: int
    failures: list[tuple[Word, NCPoly]]
    skipped: list[tuple[Word, str]]

    @property
    def ok(self) -> bool:
        return not self.failures


def check_local_confluence(pres: Presentation,
                           extra_overlaps: Iterable[Word] = ()) -> ConfluenceReport:
    """Resolve every three-letter overlap both ways and compare.

    This certifies local confluence on the tested overlaps (hence, with
    termination, global confluence on words built from those letters); it is
    an exhaustive machine check at the configured truncation, not a proof for
    all N.
    """
    failures: list[tuple[Word, NCPoly]] = []
    skipped: list[tuple[Word, str]] = []
    overlaps = list(pres.confluence_overlaps()) + list(extra_overlaps)
    checked = 0
    for w in overlaps:
        a, b, c = w
        try:
            r_left = pres.rule_for(a, b)
            r_right = pres.rule_for(b, c)
            if r_left is None or r_right is None:
                continue
            # reduce the (a,b) redex first, then fully
            left: dict[Word, Fraction] = {}
            for rw, rc in r_left.items():
                for nw, nc in pres.normalize_word(rw + (c,)).items():
                    left[nw] = left.get(nw, Fraction(0)) + rc * nc
            right: dict[Word, Fraction] = {}
            for rw, rc in r_right.items():
                for nw, nc in pres.normalize_word((a,) + rw).items():
                    right[nw] = right.get(nw, Fraction(0)) + rc * nc
            diff = NCPoly(left) - NCPoly(right)
            checked += 1
            if diff:
                failures.append((w, diff))
        except TruncationOverflow as exc:
            skipped.append((w, str(exc)))
    return ConfluenceReport(checked=checked, failures=failures, skipped=skipped)


# -- tensors ------------------------------------------------------------------

TensorWord = tuple[Word, ...]


class TensorPoly:
    """Linear combination of rank-k tensors of normal-form words.

    Each leg carries an owning Presentation; all arithmetic normalizes legs
    through their owners.  Mixing tensors with different rank or different
    leg owners raises RankMismatch.
    """

    __slots__ = ("owners", "terms")

    def __init__(self, owners: tuple[Presentation, ...],
                 terms: Optional[Mapping[TensorWord, Coeff]] = None):
        self.owners = tuple(owners)
        self.terms: dict[TensorWord, Fraction] = {}
        if terms:
            for tw, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[tw] = c

    @property
    def rank(self) -> int:
        return len(self.owners)

    @staticmethod
    def unit(owners: tuple[Presentation, ...], c: Coeff = 1) -> "TensorPoly":
        return TensorPoly(owners, {tuple(ONE_WORD for _ in owners): Fraction(c)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other: "TensorPoly"):
        if not isinstance(other, TensorPoly):
            raise RankMismatch(f"expected TensorPoly, got {type(other).__name__}")
        if self.owners != other.owners:
            if self.rank != other.rank:
                raise RankMismatch(
                    f"rank {self.rank} vs {other.rank}")
            raise RankMismatch(
                "tensor legs belong to different presentations: "
                f"{[p.name for p in self.owners]} vs {[p.name for p in other.owners]}")

    def __eq__(self, other):
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return self.owners == other.owners and self.terms == other.terms

    def __add__(self, other: "TensorPoly") -> "TensorPoly":
        self._check(other)
        out = dict(self.terms)
        for tw, c in other.terms.items():
            s = out.get(tw, Fraction(0)) + c
            if s:
                out[tw] = s
            else:
                out.pop(tw, None)
        return TensorPoly(self.owners, out)

    def __neg__(self):
        return TensorPoly(self.owners, {tw: -c for tw, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: Coeff) -> "TensorPoly":
        c = Fraction(c)
        if not c:
            return TensorPoly(self.owners)
        return TensorPoly(self.owners, {tw: c * k for tw, k in self.terms.items()})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def normalized(self) -> "TensorPoly":
        out: dict[TensorWord, Fraction] = {}
        for tw, c in self.terms.items():
            _accumulate_product(self.owners, ((tw, c),), out)
        return TensorPoly(self.owners, out)

    def sorted_terms(self) -> list[tuple[TensorWord, Fraction]]:
        return sorted(self.terms.items())

    def apply_to_leg(self, leg: int, fn: Callable[[Word], "TensorPoly"]) -> "TensorPoly":
        """Replace leg `leg` of each term by fn(word), splicing its legs in."""
        out: Optional[TensorPoly] = None
        new_owners: Optional[tuple[Presentation, ...]] = None
        acc: dict[TensorWord, Fraction] = {}
        for tw, c in self.terms.items():
            sub = fn(tw[leg])
            if new_owners is None:
                new_owners = self.owners[:leg] + sub.owners + self.owners[leg + 1:]
            for sw, sc in sub.terms.items():
                new_tw = tw[:leg] + sw + tw[leg + 1:]
                s = acc.get(new_tw, Fraction(0)) + c * sc
                if s:
                    acc[new_tw] = s
                else:
                    acc.pop(new_tw, None)
        if new_owners is None:
            # no terms: caller must still know the owner shape; best effort
            raise ValueError("apply_to_leg on zero tensor is ambiguous")
        return TensorPoly(new_owners, acc)

    def map_leg(self, leg: int, fn: Callable[[Word], NCPoly]) -> "TensorPoly":
        """Apply a same-algebra linear map to one leg."""
        acc: dict[TensorWord, Fraction] = {}
        for tw, c in self.terms.items():
            img = fn(tw[leg])
            for w2, c2 in img.terms.items():
                new_tw = tw[:leg] + (w2,) + tw[leg + 1:]
                s = acc.get(new_tw, Fraction(0)) + c * c2
                if s:
                    acc[new_tw] = s
                else:
                    acc.pop(new_tw, None)
        return TensorPoly(self.owners, acc)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for tw, c in self.sorted_terms():
            legs = " (x) ".join("*".join(w) if w else "1" for w in tw)
            parts.append(f"({c}) {legs}")
        return " + ".join(parts)


def _accumulate_product(owners, pairs, out):
    for tw, c in pairs:
        legs = [owners[i].normalize_word(tw[i]) for i in range(len(owners))]
        _distribute(legs, 0, ONE_WORD and tuple(), c, out, [])


def _distribute(legs, i, _unused, c, out, prefix):
    if i == len(legs):
        tw = tuple(prefix)
        s = out.get(tw, Fraction(0)) + c
        if s:
            out[tw] = s
        else:
            out.pop(tw, None)
        return
    for w, k in legs[i].items():
        prefix.append(w)
        _distribute(legs, i + 1, None, c * k, out, prefix)
        prefix.pop()


def tensor_mul(a: TensorPoly, b: TensorPoly) -> TensorPoly:
    """Legwise product; each leg normalized by its owner."""
    a._check(b)
    owners = a.owners
    out: dict[TensorWord, Fraction] = {}
    for twa, ca in a.terms.items():
        for twb, cb in b.terms.items():
            legs = [owners[i].normalize_word(twa[i] + twb[i]) for i in range(len(owners))]
            _distribute(legs, 0, None, ca * cb, out, [])
    return TensorPoly(owners, out)


def tensor_of(owners: tuple[Presentation, ...], *leg_polys) -> TensorPoly:
    """Build a TensorPoly from one polynomial (or coercible) per leg."""
    if len(leg_polys) != len(owners):
        raise RankMismatch(f"{len(leg_polys)} legs for {len(owners)} owners")
    out: dict[TensorWord, Fraction] = {}
    termss = [ _as_terms(p) for p in leg_polys ]

    def rec(i, prefix, c):
        if i == len(termss):
            tw = tuple(prefix)
            s = out.get(tw, Fraction(0)) + c
            if s:
                out[tw] = s
            else:
                out.pop(tw, None)
            return
        for w, k in termss[i].items():
            prefix.append(w)
            rec(i + 1, prefix, c * k)
            prefix.pop()

    rec(0, [], Fraction(1))
    return TensorPoly(owners, out).normalized()
