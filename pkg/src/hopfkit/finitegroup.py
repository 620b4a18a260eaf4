"""Finite-dimensional bicrossproducts from small group factorisations.

Given a finite group X factorising as X = G.M (product map G x M -> X
bijective), build the two dually paired Hopf algebras: functions on M
smash-product the group algebra of G, and the group algebra of M
smash-product functions on G.  Everything is basis-indexed linear algebra
over Q, so every axiom is verified exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Tuple

from .core import HopfkitError
from .hopf import AxiomReport

Q = Fraction
Vec = Dict[Hashable, Fraction]


class NotAFactorisation(HopfkitError):
    """The product map G x M -> X is not a bijection."""


def _vadd(a: Vec, b: Vec, c: Fraction = Q(1)) -> Vec:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, Q(0)) + c * v
        if not out[k]:
            del out[k]
    return out


@dataclass
class FiniteGroup:
    elements: List[Hashable]
    mult: Callable[[Hashable, Hashable], Hashable]
    identity: Hashable

    def inv(self, x: Hashable) -> Hashable:
        for y in self.elements:
            if self.mult(x, y) == self.identity:
                return y
        raise HopfkitError("no inverse for %r" % (x,))


@dataclass
class FiniteHopf:
    """Hopf algebra on an explicit finite basis with exact structure maps."""
    name: str
    basis: List[Hashable]
    unit: Vec
    mult: Dict[Tuple[Hashable, Hashable], Vec]
    coproduct: Dict[Hashable, Dict[Tuple[Hashable, Hashable], Fraction]]
    counit: Dict[Hashable, Fraction]
    antipode: Dict[Hashable, Vec] = field(default_factory=dict)

    def mul_vec(self, a: Vec, b: Vec) -> Vec:
        out: Vec = {}
        for x, cx in a.items():
            for y, cy in b.items():
                out = _vadd(out, self.mult[(x, y)], cx * cy)
        return out

    def cop_vec(self, a: Vec) -> Dict[Tuple[Hashable, Hashable], Fraction]:
        out: Dict[Tuple[Hashable, Hashable], Fraction] = {}
        for x, cx in a.items():
            for key, c in self.coproduct[x].items():
                out[key] = out.get(key, Q(0)) + cx * c
                if not out[key]:
                    del out[key]
        return out

    def counit_vec(self, a: Vec) -> Fraction:
        return sum((c * self.counit[x] for x, c in a.items()), Q(0))

    def antipode_vec(self, a: Vec) -> Vec:
        out: Vec = {}
        for x, cx in a.items():
            out = _vadd(out, self.antipode[x], cx)
        return out


def solve_antipode_convolution(H: FiniteHopf) -> Dict[Hashable, Vec]:
    """Solve sum S(x_(1)) x_(2) = eps(x) 1 exactly for the matrix of S."""
    n = len(H.basis)
    idx = {b: i for i, b in enumerate(H.basis)}
    # unknowns s[j][i] = coefficient of basis[i] in S(basis[j])
    rows: List[List[Fraction]] = []
    rhs: List[Fraction] = []
    for x in H.basis:
        target = {b: H.counit[x] * H.unit.get(b, Q(0)) for b in H.basis}
        # sum over Delta(x) legs: S(x1) * x2
        coeffmat: List[List[Fraction]] = [[Q(0)] * (n * n) for _ in range(n)]
        for (x1, x2), c in H.coproduct[x].items():
            for i, b in enumerate(H.basis):
                prod = H.mult[(b, x2)]
                for out_b, pc in prod.items():
                    coeffmat[idx[out_b]][idx[x1] * n + i] += c * pc
        for r in range(n):
            rows.append(coeffmat[r])
            rhs.append(target.get(H.basis[r], Q(0)))
    sol = _solve(rows, rhs, n * n)
    if sol is None:
        raise HopfkitError("no antipode exists for %s" % H.name)
    out: Dict[Hashable, Vec] = {}
    for j, b in enumerate(H.basis):
        out[b] = {H.basis[i]: sol[j * n + i] for i in range(n)
                  if sol[j * n + i]}
    return out


def _solve(rows: List[List[Fraction]], rhs: List[Fraction], m: int
           ) -> Optional[List[Fraction]]:
    n = len(rows)
    M = [rows[i][:] + [rhs[i]] for i in range(n)]
    piv = []
    r = 0
    for c in range(m):
        p = next((i for i in range(r, n) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        M[r] = [v / M[r][c] for v in M[r]]
        for i in range(n):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [vi - f * vr for vi, vr in zip(M[i], M[r])]
        piv.append(c)
        r += 1
    for i in range(r, n):
        if M[i][m]:
            return None
    x = [Q(0)] * m
    for i, c in enumerate(piv):
        x[c] = M[i][m]
    return x


def check_finite_hopf(H: FiniteHopf) -> AxiomReport:
    """Exhaustive Hopf-algebra axioms on the full basis."""
    rep = AxiomReport(algebra=H.name)
    B = H.basis

    def unit_vec(x):
        return {k: v for k, v in H.unit.items()}

    for x in B:
        for y in B:
            for z in B:
                lhs = H.mul_vec(H.mul_vec({x: Q(1)}, {y: Q(1)}), {z: Q(1)})
                rhs = H.mul_vec({x: Q(1)}, H.mul_vec({y: Q(1)}, {z: Q(1)}))
                if lhs != rhs:
                    rep.record("assoc:%r,%r,%r" % (x, y, z), False,
                               "%r != %r" % (lhs, rhs))
    rep.record("assoc", True, "all triples")
    for x in B:
        ok = (H.mul_vec(H.unit, {x: Q(1)}) == {x: Q(1)} ==
              H.mul_vec({x: Q(1)}, H.unit))
        rep.record("unit:%r" % (x,), ok, "")
    # coassociativity and counit
    for x in B:
        lhs: Dict[Tuple, Fraction] = {}
        rhs: Dict[Tuple, Fraction] = {}
        for (a, b), c in H.coproduct[x].items():
            for (a1, a2), c2 in H.coproduct[a].items():
                lhs[(a1, a2, b)] = lhs.get((a1, a2, b), Q(0)) + c * c2
            for (b1, b2), c2 in H.coproduct[b].items():
                rhs[(a, b1, b2)] = rhs.get((a, b1, b2), Q(0)) + c * c2
        lhs = {k: v for k, v in lhs.items() if v}
        rhs = {k: v for k, v in rhs.items() if v}
        rep.record("coassoc:%r" % (x,), lhs == rhs, "%r vs %r" % (lhs, rhs))
        left: Vec = {}
        right: Vec = {}
        for (a, b), c in H.coproduct[x].items():
            left = _vadd(left, {b: c * H.counit[a]})
            right = _vadd(right, {a: c * H.counit[b]})
        rep.record("counit:%r" % (x,),
                   left == {x: Q(1)} == right, "%r / %r" % (left, right))
    # bialgebra: Delta and eps are algebra maps
    for x in B:
        for y in B:
            prod = H.mul_vec({x: Q(1)}, {y: Q(1)})
            lhs = H.cop_vec(prod)
            rhs: Dict[Tuple[Hashable, Hashable], Fraction] = {}
            for (x1, x2), c in H.coproduct[x].items():
                for (y1, y2), c2 in H.coproduct[y].items():
                    left_leg = H.mul_vec({x1: Q(1)}, {y1: Q(1)})
                    right_leg = H.mul_vec({x2: Q(1)}, {y2: Q(1)})
                    for u, cu in left_leg.items():
                        for v, cv in right_leg.items():
                            key = (u, v)
                            rhs[key] = rhs.get(key, Q(0)) + c * c2 * cu * cv
            rhs = {k: v for k, v in rhs.items() if v}
            rep.record("bialg:%r,%r" % (x, y), lhs == rhs,
                       "%r vs %r" % (lhs, rhs))
            ok = (H.counit_vec(prod) == H.counit[x] * H.counit[y])
            rep.record("counit-mult:%r,%r" % (x, y), ok, "")
    # antipode, both sides
    for x in B:
        left: Vec = {}
        right: Vec = {}
        for (a, b), c in H.coproduct[x].items():
            left = _vadd(left, H.mul_vec(H.antipode_vec({a: Q(1)}),
                                         {b: Q(1)}), c)
            right = _vadd(right, H.mul_vec({a: Q(1)},
                                           H.antipode_vec({b: Q(1)})), c)
        want = {k: H.counit[x] * v for k, v in H.unit.items()
                if H.counit[x] * v}
        rep.record("antipode:%r" % (x,), left == want == right,
                   "%r / %r vs %r" % (left, right, want))
    return rep


def _cross_actions(X: FiniteGroup, G: Sequence[Hashable],
                   M: Sequence[Hashable]):
    """m |> g in G and m <| g in M from unique refactorisation mg = g'm'."""
    table = {}
    pairs = {}
    for g in G:
        for m in M:
            pairs[X.mult(g, m)] = (g, m)
    if len(pairs) != len(X.elements) or len(G) * len(M) != len(X.elements):
        raise NotAFactorisation(
            "product map G x M -> X is not a bijection "
            "(%d products, |X| = %d)" % (len(pairs), len(X.elements)))
    for m in M:
        for g in G:
            gp, mp = pairs[X.mult(m, g)]
            table[(m, g)] = (gp, mp)
    return table


def finite_group_bicross(X: FiniteGroup, G: Sequence[Hashable],
                         M: Sequence[Hashable]
                         ) -> Tuple[FiniteHopf, FiniteHopf]:
    """The two dually paired bicrossproducts of the factorisation X = G.M:
    functions-on-M smash kG (basis (m, g) = delta_m (x) g) and kM smash
    functions-on-G (basis (m, g) = m (x) delta_g)."""
    act = _cross_actions(X, G, M)
    eG = X.identity
    eM = X.identity

    def lact(m, g):          # m |> g
        return act[(m, g)][0]

    def ract(m, g):          # m <| g
        return act[(m, g)][1]

    Minv = {m: X.inv(m) for m in M}
    Ginv = {g: X.inv(g) for g in G}

    basis = [(m, g) for m in M for g in G]
    # A = functions on M, H = group algebra of G
    mult1: Dict[Tuple, Vec] = {}
    for (m, g) in basis:
        for (m2, g2) in basis:
            # (delta_m (x) g)(delta_m2 (x) g2) = [m = m2 <| g^-1] delta_m (x) g g2
            if m == ract(m2, Ginv[g]):
                mult1[((m, g), (m2, g2))] = {(m, X.mult(g, g2)): Q(1)}
            else:
                mult1[((m, g), (m2, g2))] = {}
    unit1: Vec = {}
    for m in M:
        unit1[(m, eG)] = Q(1)
    cop1: Dict[Hashable, Dict[Tuple, Fraction]] = {}
    cou1: Dict[Hashable, Fraction] = {}
    for (m, g) in basis:
        terms: Dict[Tuple, Fraction] = {}
        for x in M:
            for y in M:
                if X.mult(x, y) == m:
                    terms[((x, lact(y, g)), (y, g))] = Q(1)
        cop1[(m, g)] = terms
        cou1[(m, g)] = Q(1) if m == eM else Q(0)
    B1 = FiniteHopf(name="k[M]|>*<kG", basis=basis, unit=unit1, mult=mult1,
                    coproduct=cop1, counit=cou1)
    B1.antipode = solve_antipode_convolution(B1)

    # mirror: H = group algebra of M, A = functions on G
    mult2: Dict[Tuple, Vec] = {}
    for (m, g) in basis:
        for (m2, g2) in basis:
            # (m (x) delta_g)(m2 (x) delta_g2) = [m2^-1 |> g = g2] m m2 (x) delta_g2
            if lact(Minv[m2], g) == g2:
                mult2[((m, g), (m2, g2))] = {(X.mult(m, m2), g2): Q(1)}
            else:
                mult2[((m, g), (m2, g2))] = {}
    unit2: Vec = {}
    for g in G:
        unit2[(eM, g)] = Q(1)
    cop2: Dict[Hashable, Dict[Tuple, Fraction]] = {}
    cou2: Dict[Hashable, Fraction] = {}
    for (m, g) in basis:
        terms = {}
        for x in G:
            for y in G:
                if X.mult(x, y) == g:
                    terms[((m, x), (ract(m, x), y))] = Q(1)
        cop2[(m, g)] = terms
        cou2[(m, g)] = Q(1) if g == eG else Q(0)
    B2 = FiniteHopf(name="kM>*<|k[G]", basis=basis, unit=unit2, mult=mult2,
                    coproduct=cop2, counit=cou2)
    B2.antipode = solve_antipode_convolution(B2)
    return B1, B2


def check_pairing(B1: FiniteHopf, B2: FiniteHopf) -> AxiomReport:
    """Duality axioms for <delta_m g, m' delta_g'> = [m=m'][g=g'], exhaustive."""
    rep = AxiomReport(algebra="pairing:%s|%s" % (B1.name, B2.name))

    def pair_vec(a: Vec, w: Vec) -> Fraction:
        return sum((ca * w.get(x, Q(0)) for x, ca in a.items()), Q(0))

    B = B1.basis
    for x in B:
        for y in B:
            for w in B:
                lhs = pair_vec(B1.mul_vec({x: Q(1)}, {y: Q(1)}), {w: Q(1)})
                rhs = sum((c * (Q(1) if (a == x and b == y) else Q(0))
                           for (a, b), c in B2.coproduct[w].items()), Q(0))
                if lhs != rhs:
                    rep.record("mult-cop:%r,%r,%r" % (x, y, w), False,
                               "%s != %s" % (lhs, rhs))
    rep.record("mult-vs-coproduct", True, "all triples")
    for x in B:
        for w in B:
            for v in B:
                lhs = pair_vec({x: Q(1)}, B2.mul_vec({w: Q(1)}, {v: Q(1)}))
                rhs = sum((c * (Q(1) if (a == w and b == v) else Q(0))
                           for (a, b), c in B1.coproduct[x].items()), Q(0))
                if lhs != rhs:
                    rep.record("cop-mult:%r,%r,%r" % (x, w, v), False,
                               "%s != %s" % (lhs, rhs))
    rep.record("coproduct-vs-mult", True, "all triples")
    for w in B:
        rep.record("unit:%r" % (w,),
                   pair_vec(B1.unit, {w: Q(1)}) == B2.counit[w], "")
        rep.record("counit:%r" % (w,),
                   pair_vec({w: Q(1)}, B2.unit) == B1.counit[w], "")
    for x in B:
        lhs = {w: pair_vec(B1.antipode_vec({x: Q(1)}), {w: Q(1)}) for w in B}
        rhs = {w: pair_vec({x: Q(1)}, B2.antipode_vec({w: Q(1)})) for w in B}
        rep.record("antipode:%r" % (x,), lhs == rhs, "%r vs %r" % (lhs, rhs))
    return rep


def pairing_matrix(B1: FiniteHopf, B2: FiniteHopf) -> List[List[Fraction]]:
    n = len(B1.basis)
    return [[Q(1) if B1.basis[i] == B2.basis[j] else Q(0) for j in range(n)]
            for i in range(n)]


# -- concrete factorisations ---------------------------------------------------


def _perm_mult(p, q):
    return tuple(p[q[i]] for i in range(len(p)))


def s3_group() -> FiniteGroup:
    els = [p for p in permutations(range(3))]
    return FiniteGroup(elements=els, mult=_perm_mult, identity=(0, 1, 2))


def s3_factorisation() -> Tuple[FiniteGroup, List, List]:
    """S3 = Z/3 . Z/2 with G the rotations and M a transposition."""
    X = s3_group()
    G = [(0, 1, 2), (1, 2, 0), (2, 0, 1)]
    M = [(0, 1, 2), (1, 0, 2)]
    return X, G, M


def trivial_factorisation(X: FiniteGroup) -> Tuple[FiniteGroup, List, List]:
    """X = X . {e}; functions-on-{e} smash kX is kX itself."""
    return X, list(X.elements), [X.identity]
