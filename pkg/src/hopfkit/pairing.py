"""Dual pairings between enveloping-type and function-type presentations.

A :class:`Pairing` evaluates ``<u, f>`` recursively from a generator table
using the two multiplication-vs-comultiplication identities, memoizing on
normal words.  Closed-form evaluations are provided separately as
independent oracles, together with duality-axiom verification and exact
Gram-rank certificates on graded slices.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .core import NCPoly, Word
from .hopf import AxiomReport, HopfAlgebra

Q = Fraction


@dataclass
class Pairing:
    """Bilinear form between a pair of Hopf presentations.

    ``U`` is the enveloping-type side (first pairing slot), ``F`` the
    function-type side.  ``table`` holds generator-generator values;
    missing entries are zero.
    """

    U: HopfAlgebra
    F: HopfAlgebra
    table: Dict[Tuple[str, str], Fraction]
    name: str = ""
    _cache: Dict[Tuple[Word, Word], Fraction] = field(default_factory=dict, repr=False)

    # -- word-level evaluation ------------------------------------------

    def pair_words(self, uw: Word, fw: Word) -> Fraction:
        key = (uw, fw)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        val = self._pair_words(uw, fw)
        self._cache[key] = val
        return val

    def _counit_word(self, H: HopfAlgebra, w: Word) -> Fraction:
        out = Q(1)
        for g in w:
            out *= H.gen_counit(g)
            if out == 0:
                return Q(0)
        return out

    def _pair_words(self, uw: Word, fw: Word) -> Fraction:
        if not uw:
            return self._counit_word(self.F, fw)
        if not fw:
            return self._counit_word(self.U, uw)
        if len(uw) == 1 and len(fw) == 1:
            return self.table.get((uw[0], fw[0]), Q(0))
        if len(uw) > 1:
            # <u0 * rest, f> = sum <u0, f(1)> <rest, f(2)>
            head, rest = (uw[0],), uw[1:]
            total = Q(0)
            for (l1, l2), c in self.F.coproduct_word(fw).terms.items():
                a = self.pair_words(head, l1)
                if a == 0:
                    continue
                b = self.pair_words(rest, l2)
                if b == 0:
                    continue
                total += c * a * b
            return total
        # len(uw) == 1, len(fw) > 1:
        # <u, f0 * rest> = sum <u(1), f0> <u(2), rest>
        fhead, frest = (fw[0],), fw[1:]
        total = Q(0)
        for (l1, l2), c in self.U.coproduct_word(uw).terms.items():
            a = self.pair_words(l1, fhead)
            if a == 0:
                continue
            b = self.pair_words(l2, frest)
            if b == 0:
                continue
            total += c * a * b
        return total

    def pair(self, u: NCPoly, f: NCPoly) -> Fraction:
        u = self.U.normalize(u)
        f = self.F.normalize(f)
        total = Q(0)
        for uw, cu in u.terms.items():
            for fw, cf in f.terms.items():
                v = self.pair_words(uw, fw)
                if v:
                    total += cu * cf * v
        return total


# -- canned pairings -----------------------------------------------------


def pairing_ud0_fd0(U: HopfAlgebra, F: HopfAlgebra) -> Pairing:
    """<z_m, t_n> = delta_{m,n}."""
    table: Dict[Tuple[str, str], Fraction] = {}
    for zg in U.generators:
        m = int(zg[1:])
        tg = "t%d" % m
        if tg in F.generators:
            table[(zg, tg)] = Q(1)
    return Pairing(U, F, table, name="Ud0|FD0")


def pairing_ubplus_fbplus(U: HopfAlgebra, F: HopfAlgebra) -> Pairing:
    """<X, beta> = 1, <Y, alpha> = 1, <Y, alphaInv> = -1."""
    table = {
        ("X", "beta"): Q(1),
        ("Y", "alpha"): Q(1),
        ("Y", "alphaInv"): Q(-1),
    }
    return Pairing(U, F, table, name="Ubplus|FBplus")


def pairing_ucm_hcm(U: HopfAlgebra, F: HopfAlgebra) -> Pairing:
    """Pairing of the deformation-family duals at parameter 1.

    <z_m, t_n> = delta_{m,n}; <alpha, Y> = 1, <alphaInv, Y> = -1,
    <beta, X> = 1.
    """
    table: Dict[Tuple[str, str], Fraction] = {
        ("alpha", "Y"): Q(1),
        ("alphaInv", "Y"): Q(-1),
        ("beta", "X"): Q(1),
    }
    for zg in U.generators:
        if zg.startswith("z"):
            tg = "t" + zg[1:]
            if tg in F.generators:
                table[(zg, tg)] = Q(1)
    return Pairing(U, F, table, name="UCM|HCM")


def pairing_uheis_kheis(U: HopfAlgebra, F: HopfAlgebra, lam: Fraction) -> Pairing:
    """<z, t> = 2*lam, <alpha, Y> = lam, <alphaInv, Y> = -lam, <beta, X> = lam."""
    lam = Q(lam)
    table = {
        ("z", "t"): 2 * lam,
        ("alpha", "Y"): lam,
        ("alphaInv", "Y"): -lam,
        ("beta", "X"): lam,
    }
    return Pairing(U, F, table, name="UHeis|KHeis")


# -- closed forms (independent oracles) ----------------------------------


def zword_tn_closed(ms: Sequence[int], n: int) -> Fraction:
    """Closed form for <z_{m1}...z_{mp}, t_n>.

    Nonzero iff m1+...+mp = n + p - 1, in which case the value is
    prod_{j=1}^{p-1} (m1+...+mj - j + 1).
    """
    p = len(ms)
    if p == 0:
        return Q(0)  # counit of t_n
    if sum(ms) != n + p - 1:
        return Q(0)
    val = Q(1)
    run = 0
    for j in range(1, p):
        run += ms[j - 1]
        val *= run - j + 1
    return val


def zm_tword_closed(m: int, ns: Sequence[int]) -> Fraction:
    """Closed form for <z_m, t_{n1}...t_{nA}> with every n_i >= 2.

    A single z-letter pairs nonzero against a t-monomial only when the
    monomial is a single t_m (value 1); with t_1 = 1 this covers the
    multiset {m, 1, ..., 1}.
    """
    ns = [n for n in ns if n != 1]
    if len(ns) == 1 and ns[0] == m:
        return Q(1)
    if len(ns) == 0:
        return Q(0)
    return Q(0)


def diag_closed(multiplicities: Sequence[int]) -> Fraction:
    """<z_{m1}^{a1}...z_{mp}^{ap}, t_{m1}^{a1}...t_{mp}^{ap}> = a1!...ap!

    for distinct indices m1 < ... < mp.
    """
    out = Q(1)
    for a in multiplicities:
        out *= math.factorial(a)
    return out


def xy_ab_closed(j: int, k: int, q: Fraction, r: int) -> Fraction:
    """<X^j Y^k, alpha^q beta^r> = j! * delta_{j,r} * q^k.

    ``q`` is the net alpha exponent (alphaInv letters count -1).
    """
    if j != r:
        return Q(0)
    return Q(math.factorial(j)) * (Q(q) ** k if k else Q(1))


def heis_closed(lam: Fraction, i: int, j: int, k: int,
                p: int, q: int, r: int) -> Fraction:
    """<z^p alpha^q beta^r, t^i X^j Y^k> for the Heisenberg pair.

    Value: delta_{i,p} delta_{j,r} * i! (2 lam)^i * j! lam^j * (lam q)^k
    with q the net alpha exponent.
    """
    lam = Q(lam)
    if i != p or j != r:
        return Q(0)
    val = Q(math.factorial(i)) * (2 * lam) ** i
    val *= Q(math.factorial(j)) * lam ** j
    val *= (lam * q) ** k if k else Q(1)
    return val


def split_word(w: Word, first_block) -> Tuple[Word, Word]:
    """Split a normal word into (block1, block2) at the first letter not
    satisfying ``first_block``."""
    i = 0
    while i < len(w) and first_block(w[i]):
        i += 1
    return w[:i], w[i:]


def factorised_pair(P: Pairing, uw: Word, fw: Word,
                    u_first_block, f_first_block) -> Fraction:
    """Split-monomial evaluation <u1*u2, f1*f2> = <u1,f1> <u2,f2>.

    Valid when the pairing is block-diagonal with respect to the two
    generator blocks on each side (the factorised strategy); used as an
    independent cross-check of the recursive strategy.
    """
    u1, u2 = split_word(uw, u_first_block)
    f1, f2 = split_word(fw, f_first_block)
    a = P.pair_words(u1, f1)
    if a == 0:
        return Q(0)
    return a * P.pair_words(u2, f2)


# -- duality axioms -------------------------------------------------------


def _graded_words(H: HopfAlgebra, bound: int) -> List[Word]:
    return H.basis(bound)


def check_duality(P: Pairing, grade_bound: int = 3,
                  product_bound: Optional[int] = None) -> AxiomReport:
    """Verify the five duality axioms on exhaustive graded bases.

    Axioms: (1) <u, f g> = sum <u1,f><u2,g>; (2) <u v, f> =
    sum <u,f1><v,f2>; (3) <S(u), f> = <u, S(f)>; (4) <u, 1> = eps(u);
    (5) <1, f> = eps(f).
    """
    rep = AxiomReport(algebra="duality:%s" % P.name)
    U, F = P.U, P.F
    ub = _graded_words(U, grade_bound)
    fb = _graded_words(F, grade_bound)
    pb = product_bound if product_bound is not None else grade_bound

    for uw in ub:
        # axiom 4
        got = P.pair_words(uw, ())
        want = P._counit_word(U, uw)
        rep.record("counit-left:%s" % (uw,), got == want, str((got, want)))
        # axiom 3
        su = U.antipode(NCPoly({uw: Q(1)}))
        for fw in fb:
            lhs = P.pair(su, NCPoly({fw: Q(1)}))
            rhs = P.pair(NCPoly({uw: Q(1)}), F.antipode(NCPoly({fw: Q(1)})))
            rep.record("antipode:%s|%s" % (uw, fw), lhs == rhs, str((lhs, rhs)))
    for fw in fb:
        got = P.pair_words((), fw)
        want = P._counit_word(F, fw)
        rep.record("counit-right:%s" % (fw,), got == want, str((got, want)))

    # axiom 1: u against products f*g
    small_f = [w for w in fb if len(w) <= pb]
    for uw in ub:
        cop_u = U.coproduct_word(uw)
        for f1 in small_f:
            for f2 in small_f:
                prod = F.mul(NCPoly({f1: Q(1)}), NCPoly({f2: Q(1)}))
                lhs = P.pair(NCPoly({uw: Q(1)}), prod)
                rhs = Q(0)
                for (l1, l2), c in cop_u.terms.items():
                    a = P.pair_words(l1, f1)
                    if a == 0:
                        continue
                    rhs += c * a * P.pair_words(l2, f2)
                rep.record("mult-right:%s|%s,%s" % (uw, f1, f2),
                           lhs == rhs, str((lhs, rhs)))
    # axiom 2: products u*v against f
    small_u = [w for w in ub if len(w) <= pb]
    for fw in fb:
        cop_f = F.coproduct_word(fw)
        for u1 in small_u:
            for u2 in small_u:
                prod = U.mul(NCPoly({u1: Q(1)}), NCPoly({u2: Q(1)}))
                lhs = P.pair(prod, NCPoly({fw: Q(1)}))
                rhs = Q(0)
                for (l1, l2), c in cop_f.terms.items():
                    a = P.pair_words(u1, l1)
                    if a == 0:
                        continue
                    rhs += c * a * P.pair_words(u2, l2)
                rep.record("mult-left:%s,%s|%s" % (u1, u2, fw),
                           lhs == rhs, str((lhs, rhs)))
    return rep


# -- graded slices and Gram certificates ----------------------------------


def graded_basis(H: HopfAlgebra, grade: int) -> List[Word]:
    """Canonically ordered basis of the grade-``grade`` slice.

    Requires every generator to have positive grade so that the slice is
    finite-dimensional.
    """
    for g in H.generators:
        if H.grades.get(g, 0) <= 0:
            raise ValueError(
                "graded slice of %s is not finite-dimensional: generator %s "
                "has grade %s" % (H.name, g, H.grades.get(g, 0)))
    words = [w for w in H.basis(grade) if H.grade(w) == grade]
    return sorted(words)


def gram_matrix(P: Pairing, grade: int) -> Tuple[List[Word], List[Word],
                                                 List[List[Fraction]]]:
    rows = graded_basis(P.U, grade)
    cols = graded_basis(P.F, grade)
    M = [[P.pair_words(u, f) for f in cols] for u in rows]
    return rows, cols, M


def bareiss(M: Sequence[Sequence[Fraction]]) -> Tuple[int, Optional[Fraction]]:
    """Fraction-free elimination: returns (rank, det) — det only if square.

    Rows are scaled to integers first; Bareiss one-step elimination keeps
    all intermediates integral.
    """
    nrows = len(M)
    ncols = len(M[0]) if nrows else 0
    scale = Q(1)
    A: List[List[int]] = []
    for row in M:
        lcm = 1
        for x in row:
            lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
        scale *= lcm
        A.append([int(x * lcm) for x in row])
    rank = 0
    prev = 1
    sign = 1
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if A[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            A[r], A[piv] = A[piv], A[r]
            sign = -sign
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                A[i][j] = (A[r][c] * A[i][j] - A[i][c] * A[r][j]) // prev
            A[i][c] = 0
        prev = A[r][c]
        r += 1
        rank = r
        if r == nrows:
            break
    det: Optional[Fraction] = None
    if nrows == ncols:
        if rank < nrows:
            det = Q(0)
        else:
            det = Q(sign * prev) / scale
    return rank, det


def gram_rank(P: Pairing, grade: int):
    """(rank, dim-left, dim-right, det-or-None) of the grade slice."""
    rows, cols, M = gram_matrix(P, grade)
    if not rows or not cols:
        return 0 if (rows or cols) else 1, len(rows), len(cols), None
    rank, det = bareiss(M)
    return rank, len(rows), len(cols), det


# -- vanishing sweeps ------------------------------------------------------


def check_vanishing_sweeps(P: Pairing, grade_bound: int = 5) -> AxiomReport:
    """Structural-zero sweeps for an enveloping/function pair.

    Part 1: a z-word pairs to zero against a t-monomial with more factors
    than the z-word has letters.  Part 2: the pairing vanishes across
    mismatched grades.
    """
    rep = AxiomReport(algebra="vanishing:%s" % P.name)
    for g in range(grade_bound + 1):
        for h in range(grade_bound + 1):
            us = graded_basis(P.U, g)
            fs = graded_basis(P.F, h)
            for uw in us:
                for fw in fs:
                    v = P.pair_words(uw, fw)
                    if h != g:
                        rep.record("cross-grade:%s|%s" % (uw, fw), v == 0, str(v))
                    elif len(fw) > len(uw):
                        rep.record("excess-factors:%s|%s" % (uw, fw), v == 0, str(v))
    return rep
