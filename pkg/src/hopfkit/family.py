"""Builders for the Connes-Moscovici Hopf algebra and its relatives.

All algebras are truncated at a configurable top index N (for the infinite
families) and parametrized by an exact rational deformation parameter lam.
Every builder returns a HopfAlgebra whose rewrite rules put words into the
block normal order documented on the builder.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .core import NCPoly, TensorPoly, Word, _Overflow, tensor_of
from .hopf import HopfAlgebra, HopfMorphism, solve_antipode

Q = Fraction


def tname(n: int) -> str:
    return f"t{n}"


def zname(n: int) -> str:
    return f"z{n}"


def aqname(q: Fraction) -> str:
    return f"a[{Fraction(q)}]"


_AQ_RE = re.compile(r"^a\[(-?\d+(?:/\d+)?)\]$")


def aq_index(g: str) -> Optional[Fraction]:
    m = _AQ_RE.match(g)
    return Fraction(m.group(1)) if m else None


def _swap_rules(block: list[str]) -> dict:
    """Commutativity rules putting a block of letters in list order."""
    rules = {}
    for i, g in enumerate(block):
        for h in block[:i]:
            rules[(g, h)] = {(h, g): Q(1)}
    return rules


@lru_cache(maxsize=None)
def _compositions(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """Compositions of n into k positive parts."""
    if k == 1:
        return ((n,),)
    out = []
    for first in range(1, n - k + 2):
        for rest in _compositions(n - first, k - 1):
            out.append((first,) + rest)
    return tuple(out)


def composition_sum(n: int, k: int) -> NCPoly:
    """Sum over compositions of n into k parts of t_{i1}...t_{ik} (t1 = 1)."""
    out: dict[Word, Fraction] = {}
    for comp in _compositions(n, k):
        word = tuple(sorted(tname(i) for i in comp if i > 1))
        out[word] = out.get(word, Q(0)) + 1
    return NCPoly(out)


def _t_coproduct(H: HopfAlgebra, n: int) -> TensorPoly:
    """Delta(t_n) = sum_k t_k (x) (composition sum of n into k parts)."""
    acc = TensorPoly(H.pair)
    for k in range(1, n + 1):
        first = NCPoly.unit() if k == 1 else NCPoly.gen(tname(k))
        acc = acc + tensor_of(H.pair, first, composition_sum(n, k))
    return acc


def _t_grades(N: int) -> dict[str, int]:
    return {tname(n): n - 1 for n in range(2, N + 1)}


def _z_grades(N: int) -> dict[str, int]:
    return {zname(n): n - 1 for n in range(2, N + 1)}


# ---------------------------------------------------------------------------
# F[D0]: commutative coordinate algebra with the composition coproduct
# ---------------------------------------------------------------------------

def build_fd0(N: int = 8) -> HopfAlgebra:
    gens = [tname(n) for n in range(2, N + 1)]
    H = HopfAlgebra(
        name=f"FD0(N={N})", tag="FD0", generators=gens,
        rules=_swap_rules(gens), grades=_t_grades(N), truncation=N)
    for n in range(2, N + 1):
        H.coproducts[tname(n)] = _t_coproduct(H, n)
        H.counits[tname(n)] = Q(0)
    H.antipodes = solve_antipode(H, gens)
    return H


def fd0_antipode_closed(H: HopfAlgebra, n_plus_1: int) -> NCPoly:
    """Closed-form antipode of t_{n+1} as a signed sum over partitions.

    S(t_{n+1}) = sum over exponent vectors c (sum c_j = n, sum j c_j = 2n)
    of (-1)^(n-c1) * (2n-c1)! c1! / (n+1)! * prod_j t_j^{c_j} / c_j!.
    """
    n = n_plus_1 - 1
    out = NCPoly()

    def partitions(total, max_part):
        if total == 0:
            yield []
            return
        for p in range(min(total, max_part), 0, -1):
            for rest in partitions(total - p, p):
                yield [p] + rest

    for part in partitions(n, n):
        # part lists values (j-1) for letters t_j with j >= 2
        mult: dict[int, int] = {}
        for p in part:
            mult[p + 1] = mult.get(p + 1, 0) + 1
        c1 = n - sum(mult.values())
        if c1 < 0:
            continue
        coeff = Q((-1) ** (n - c1)) * Q(math.factorial(2 * n - c1) * math.factorial(c1),
                                        math.factorial(n + 1))
        for j, cj in mult.items():
            coeff /= math.factorial(cj)
        word = tuple(sorted(tname(j) for j, cj in mult.items() for _ in range(cj)))
        out = out + NCPoly({word: coeff})
    return H.normalize(out)


# ---------------------------------------------------------------------------
# H_CM(lam): the Connes-Moscovici Hopf algebra (lambda-deformed)
# ---------------------------------------------------------------------------

def build_hcm(lam: Fraction = Q(1), N: int = 8) -> HopfAlgebra:
    """Normal order: t-block < X < Y."""
    lam = Q(lam)
    tgens = [tname(n) for n in range(2, N + 1)]
    gens = tgens + ["X", "Y"]
    rules = _swap_rules(tgens)
    for n in range(2, N + 1):
        # X t_n = t_n X + lam ((n+1) t_{n+1} - 2 t_2 t_n)
        if lam:
            if n + 1 > N:
                rules[("X", tname(n))] = _Overflow(tname(n + 1), N)
            else:
                rules[("X", tname(n))] = {
                    (tname(n), "X"): Q(1),
                    (tname(n + 1),): lam * (n + 1),
                    tuple(sorted((tname(2), tname(n)))): -2 * lam,
                }
        else:
            rules[("X", tname(n))] = {(tname(n), "X"): Q(1)}
        # Y t_n = t_n Y + lam (n-1) t_n
        rules[("Y", tname(n))] = {(tname(n), "Y"): Q(1), (tname(n),): lam * (n - 1)}
    rules[("Y", "X")] = {("X", "Y"): Q(1), ("X",): lam}

    grades = _t_grades(N)
    grades.update({"X": 1, "Y": 0})
    H = HopfAlgebra(name=f"HCM(lam={lam},N={N})", tag="HCM", generators=gens,
                    rules=rules, grades=grades, truncation=N, lam=lam)
    for n in range(2, N + 1):
        H.coproducts[tname(n)] = _t_coproduct(H, n)
        H.counits[tname(n)] = Q(0)
    H.coproducts["X"] = tensor_of(H.pair, "X", 1) + tensor_of(H.pair, 1, "X") \
        + tensor_of(H.pair, "Y", 2 * NCPoly.gen(tname(2)))
    H.coproducts["Y"] = tensor_of(H.pair, "Y", 1) + tensor_of(H.pair, 1, "Y")
    H.counits["X"] = Q(0)
    H.counits["Y"] = Q(0)
    H.antipodes["Y"] = NCPoly({("Y",): Q(-1)})
    H.antipodes = solve_antipode(H, tgens + ["X"]) | H.antipodes
    return H


# ---------------------------------------------------------------------------
# U(d0): enveloping algebra of the positive-side vector-field Lie algebra
# ---------------------------------------------------------------------------

def build_ud0(N: int = 8) -> HopfAlgebra:
    """[z_m, z_n] = (m - n) z_{m+n-1}; all generators primitive."""
    gens = [zname(n) for n in range(2, N + 1)]
    rules = {}
    for i in range(2, N + 1):
        for j in range(2, i):
            # z_i z_j = z_j z_i + (i - j) z_{i+j-1}
            if i + j - 1 > N:
                rules[(zname(i), zname(j))] = _Overflow(zname(i + j - 1), N)
            else:
                rules[(zname(i), zname(j))] = {
                    (zname(j), zname(i)): Q(1), (zname(i + j - 1),): Q(i - j)}
    H = HopfAlgebra(name=f"Ud0(N={N})", tag="Ud0", generators=gens, rules=rules,
                    grades=_z_grades(N), truncation=N)
    for g in gens:
        H.coproducts[g] = tensor_of(H.pair, g, 1) + tensor_of(H.pair, 1, g)
        H.counits[g] = Q(0)
        H.antipodes[g] = NCPoly({(g,): Q(-1)})
    return H


# ---------------------------------------------------------------------------
# F[B+] and U(b+): the 2d factor Hopf algebras
# ---------------------------------------------------------------------------

def _group_like_rules(rules: dict) -> dict:
    rules[("alpha", "alphaInv")] = {(): Q(1)}
    rules[("alphaInv", "alpha")] = {(): Q(1)}
    return rules


def build_fbplus() -> HopfAlgebra:
    """Commutative; alpha group-like invertible, beta a twisted primitive."""
    gens = ["alpha", "alphaInv", "beta"]
    rules = _group_like_rules({})
    rules[("beta", "alpha")] = {("alpha", "beta"): Q(1)}
    rules[("beta", "alphaInv")] = {("alphaInv", "beta"): Q(1)}
    H = HopfAlgebra(name="FBplus", tag="FBplus", generators=gens, rules=rules,
                    grades={"alpha": 0, "alphaInv": 0, "beta": 1})
    H.coproducts["alpha"] = tensor_of(H.pair, "alpha", "alpha")
    H.coproducts["alphaInv"] = tensor_of(H.pair, "alphaInv", "alphaInv")
    H.coproducts["beta"] = tensor_of(H.pair, "alpha", "beta") + tensor_of(H.pair, "beta", 1)
    H.counits.update({"alpha": Q(1), "alphaInv": Q(1), "beta": Q(0)})
    H.antipodes["alpha"] = NCPoly.gen("alphaInv")
    H.antipodes["alphaInv"] = NCPoly.gen("alpha")
    H.antipodes["beta"] = NCPoly({("alphaInv", "beta"): Q(-1)})
    return H


def build_ubplus(lam: Fraction = Q(1)) -> HopfAlgebra:
    """[Y, X] = lam X; X, Y primitive.  Normal order X < Y."""
    lam = Q(lam)
    rules = {("Y", "X"): {("X", "Y"): Q(1), ("X",): lam}}
    H = HopfAlgebra(name=f"Ubplus(lam={lam})", tag="Ubplus", generators=["X", "Y"],
                    rules=rules, grades={"X": 1, "Y": 0}, lam=lam)
    for g in ["X", "Y"]:
        H.coproducts[g] = tensor_of(H.pair, g, 1) + tensor_of(H.pair, 1, g)
        H.counits[g] = Q(0)
        H.antipodes[g] = NCPoly({(g,): Q(-1)})
    return H


# ---------------------------------------------------------------------------
# k_lam[Heis] and U_lam(heis): the Heisenberg-type quotient pair
# ---------------------------------------------------------------------------

def build_kheis(lam: Fraction = Q(1)) -> HopfAlgebra:
    """Normal order t < X < Y; [Y,X]=lam X, [X,t]=lam t^2/2, [Y,t]=lam t."""
    lam = Q(lam)
    rules = {
        ("X", "t"): {("t", "X"): Q(1), ("t", "t"): lam / 2},
        ("Y", "t"): {("t", "Y"): Q(1), ("t",): lam},
        ("Y", "X"): {("X", "Y"): Q(1), ("X",): lam},
    }
    H = HopfAlgebra(name=f"KHeis(lam={lam})", tag="KHeis", generators=["t", "X", "Y"],
                    rules=rules, grades={"t": 1, "X": 1, "Y": 0}, lam=lam)
    H.coproducts["t"] = tensor_of(H.pair, "t", 1) + tensor_of(H.pair, 1, "t")
    H.coproducts["X"] = (tensor_of(H.pair, "X", 1) + tensor_of(H.pair, 1, "X")
                         + tensor_of(H.pair, "Y", "t"))
    H.coproducts["Y"] = tensor_of(H.pair, "Y", 1) + tensor_of(H.pair, 1, "Y")
    H.counits.update({"t": Q(0), "X": Q(0), "Y": Q(0)})
    H.antipodes["t"] = NCPoly({("t",): Q(-1)})
    H.antipodes["Y"] = NCPoly({("Y",): Q(-1)})
    # S(X) = -X + Y t, normalized to the t < X < Y order
    H.antipodes["X"] = H.normalize({("X",): Q(-1), ("Y", "t"): Q(1)})
    return H


def build_uheis(lam: Fraction = Q(1)) -> HopfAlgebra:
    """Normal order z < alpha/alphaInv < beta.

    [z, alpha] = -2 lam alpha beta, [z, beta] = -lam beta^2, [alpha, beta] = 0;
    Delta(z) = z (x) 1 + alpha (x) z.
    """
    lam = Q(lam)
    gens = ["z", "alpha", "alphaInv", "beta"]
    rules = _group_like_rules({})
    rules[("alpha", "z")] = {("z", "alpha"): Q(1), ("alpha", "beta"): 2 * lam}
    rules[("alphaInv", "z")] = {("z", "alphaInv"): Q(1), ("alphaInv", "beta"): -2 * lam}
    rules[("beta", "z")] = {("z", "beta"): Q(1), ("beta", "beta"): lam}
    rules[("beta", "alpha")] = {("alpha", "beta"): Q(1)}
    rules[("beta", "alphaInv")] = {("alphaInv", "beta"): Q(1)}
    H = HopfAlgebra(name=f"UHeis(lam={lam})", tag="UHeis", generators=gens,
                    rules=rules,
                    grades={"z": 1, "alpha": 0, "alphaInv": 0, "beta": 1}, lam=lam)
    H.coproducts["z"] = tensor_of(H.pair, "z", 1) + tensor_of(H.pair, "alpha", "z")
    H.coproducts["alpha"] = tensor_of(H.pair, "alpha", "alpha")
    H.coproducts["alphaInv"] = tensor_of(H.pair, "alphaInv", "alphaInv")
    H.coproducts["beta"] = tensor_of(H.pair, "alpha", "beta") + tensor_of(H.pair, "beta", 1)
    H.counits.update({"z": Q(0), "alpha": Q(1), "alphaInv": Q(1), "beta": Q(0)})
    H.antipodes["alpha"] = NCPoly.gen("alphaInv")
    H.antipodes["alphaInv"] = NCPoly.gen("alpha")
    H.antipodes["beta"] = NCPoly({("alphaInv", "beta"): Q(-1)})
    H.antipodes["z"] = H.normalize({("alphaInv", "z"): Q(-1)})
    return H


# ---------------------------------------------------------------------------
# U_CM(lam): the dual-side bicrossproduct (z-family with alpha, beta)
# ---------------------------------------------------------------------------

def build_ucm(lam: Fraction = Q(1), N: int = 8) -> HopfAlgebra:
    """Normal order z-block < alpha/alphaInv < beta.

    [z_m, z_n] = (m-n) z_{m+n-1};
    [z_n, alpha] = -n lam^{n-1} alpha beta^{n-1};
    [z_n, beta] = -lam^{n-1} beta^n;
    Delta(z_n) = z_n (x) 1
               + sum_{j=2}^n lam^{n-j} C(n,j) alpha^{j-1} beta^{n-j} (x) z_j.
    """
    lam = Q(lam)
    zgens = [zname(n) for n in range(2, N + 1)]
    gens = zgens + ["alpha", "alphaInv", "beta"]
    rules = dict(build_ud0(N).rules)
    rules = {k: v for k, v in rules.items()}
    rules = _group_like_rules(rules)
    rules[("beta", "alpha")] = {("alpha", "beta"): Q(1)}
    rules[("beta", "alphaInv")] = {("alphaInv", "beta"): Q(1)}
    for n in range(2, N + 1):
        zn = zname(n)
        c = lam ** (n - 1)
        rules[("alpha", zn)] = {
            (zn, "alpha"): Q(1),
            ("alpha",) + ("beta",) * (n - 1): n * c,
        }
        rules[("alphaInv", zn)] = {
            (zn, "alphaInv"): Q(1),
            ("alphaInv",) + ("beta",) * (n - 1): -n * c,
        }
        rules[("beta", zn)] = {
            (zn, "beta"): Q(1),
            ("beta",) * n: c,
        }
    grades = _z_grades(N)
    grades.update({"alpha": 0, "alphaInv": 0, "beta": 1})
    H = HopfAlgebra(name=f"UCM(lam={lam},N={N})", tag="UCM", generators=gens,
                    rules=rules, grades=grades, truncation=N, lam=lam)
    for n in range(2, N + 1):
        d = tensor_of(H.pair, zname(n), 1)
        for j in range(2, n + 1):
            left = NCPoly({("alpha",) * (j - 1) + ("beta",) * (n - j):
                           lam ** (n - j) * math.comb(n, j)})
            d = d + tensor_of(H.pair, left, zname(j))
        H.coproducts[zname(n)] = d
        H.counits[zname(n)] = Q(0)
    H.coproducts["alpha"] = tensor_of(H.pair, "alpha", "alpha")
    H.coproducts["alphaInv"] = tensor_of(H.pair, "alphaInv", "alphaInv")
    H.coproducts["beta"] = tensor_of(H.pair, "alpha", "beta") + tensor_of(H.pair, "beta", 1)
    H.counits.update({"alpha": Q(1), "alphaInv": Q(1), "beta": Q(0)})
    H.antipodes["alpha"] = NCPoly.gen("alphaInv")
    H.antipodes["alphaInv"] = NCPoly.gen("alpha")
    H.antipodes["beta"] = NCPoly({("alphaInv", "beta"): Q(-1)})
    H.antipodes = solve_antipode(H, zgens) | H.antipodes
    return H


# ---------------------------------------------------------------------------
# Extended F[B+] with a whole rational family of group-likes
# ---------------------------------------------------------------------------

def build_fbplusext(lam: Fraction = Q(1), N: int = 8,
                    qs: Optional[list[Fraction]] = None) -> HopfAlgebra:
    """Commutative algebra on group-likes a[q] (q rational), primitive A, beta.

    a[q1] a[q2] -> a[q1+q2], a[0] -> 1;
    Delta(a[q]) = a[q] (x) a[q], Delta(A) = A (x) 1 + 1 (x) A,
    Delta(beta) = a[lam] (x) beta + beta (x) 1.
    The `qs` list only seeds basis enumeration; any rational index is legal.
    """
    lam = Q(lam)
    if qs is None:
        qs = sorted({lam, Q(1)} - {Q(0)})
    qs = [Q(q) for q in qs if Q(q) != 0]
    gens = [aqname(q) for q in qs] + ["A", "beta"]

    def pair_hook(g: str, h: str):
        qg, qh = aq_index(g), aq_index(h)
        if qg is not None and qh is not None:
            return {(aqname(qg + qh),): Q(1)}
        # commute A and beta past any a[q]; keep a[q] < A < beta
        if qh is not None and g in ("A", "beta"):
            return {(h, g): Q(1)}
        return None

    def letter_hook(g: str):
        if aq_index(g) == 0:
            return {(): Q(1)}
        return None

    rules = {("beta", "A"): {("A", "beta"): Q(1)}}
    H = HopfAlgebra(
        name=f"FBplusExt(lam={lam})", tag="FBplusExt", generators=gens,
        rules=rules, grades={"A": 0, "beta": 1},
        pair_hook=pair_hook, letter_hook=letter_hook,
        gen_check=lambda g: aq_index(g) is not None, lam=lam)

    def cop_hook(g: str):
        if aq_index(g) is not None:
            return tensor_of(H.pair, g, g)
        return None

    def counit_hook(g: str):
        return Q(1) if aq_index(g) is not None else None

    def antipode_hook(g: str):
        q = aq_index(g)
        if q is not None:
            return H.normalize((aqname(-q),))
        return None

    H.cop_hook = cop_hook
    H.counit_hook = counit_hook
    H.antipode_hook = antipode_hook
    H.coproducts["A"] = tensor_of(H.pair, "A", 1) + tensor_of(H.pair, 1, "A")
    H.coproducts["beta"] = (tensor_of(H.pair, H.normalize((aqname(lam),)), "beta")
                            + tensor_of(H.pair, "beta", 1))
    H.counits.update({"A": Q(0), "beta": Q(0)})
    H.antipodes["A"] = NCPoly({("A",): Q(-1)})
    H.antipodes["beta"] = H.normalize({(aqname(-lam), "beta"): Q(-1)})
    return H


# ---------------------------------------------------------------------------
# Left-handed variant of H_CM (co-opposite presentation, lam = 1)
# ---------------------------------------------------------------------------

def build_hcmleft(N: int = 8) -> HopfAlgebra:
    """Normal order X < Y < t-block; same relations as HCM(1), mirrored coproduct.

    Delta(t_n) = sum_k (composition sum) (x) t_k;
    Delta(X) = X (x) 1 + 1 (x) X + 2 t_2 (x) Y.
    """
    tgens = [tname(n) for n in range(2, N + 1)]
    gens = ["X", "Y"] + tgens
    rules = _swap_rules(tgens)
    for n in range(2, N + 1):
        # t_n X = X t_n - (n+1) t_{n+1} + 2 t_2 t_n
        if n + 1 > N:
            rules[(tname(n), "X")] = _Overflow(tname(n + 1), N)
        else:
            rules[(tname(n), "X")] = {
                ("X", tname(n)): Q(1),
                (tname(n + 1),): Q(-(n + 1)),
                tuple(sorted((tname(2), tname(n)))): Q(2),
            }
        rules[(tname(n), "Y")] = {("Y", tname(n)): Q(1), (tname(n),): Q(-(n - 1))}
    rules[("Y", "X")] = {("X", "Y"): Q(1), ("X",): Q(1)}
    grades = _t_grades(N)
    grades.update({"X": 1, "Y": 0})
    H = HopfAlgebra(name=f"HCMleft(N={N})", tag="HCMleft", generators=gens,
                    rules=rules, grades=grades, truncation=N, lam=Q(1))
    for n in range(2, N + 1):
        acc = TensorPoly(H.pair)
        for k in range(1, n + 1):
            second = NCPoly.unit() if k == 1 else NCPoly.gen(tname(k))
            acc = acc + tensor_of(H.pair, composition_sum(n, k), second)
        H.coproducts[tname(n)] = acc
        H.counits[tname(n)] = Q(0)
    H.coproducts["X"] = (tensor_of(H.pair, "X", 1) + tensor_of(H.pair, 1, "X")
                         + tensor_of(H.pair, 2 * NCPoly.gen(tname(2)), "Y"))
    H.coproducts["Y"] = tensor_of(H.pair, "Y", 1) + tensor_of(H.pair, 1, "Y")
    H.counits.update({"X": Q(0), "Y": Q(0)})
    H.antipodes["Y"] = NCPoly({("Y",): Q(-1)})
    H.antipodes = solve_antipode(H, tgens + ["X"]) | H.antipodes
    return H


# ---------------------------------------------------------------------------
# Registry and CLI-facing constructor
# ---------------------------------------------------------------------------

BUILDERS = {
    "FD0": lambda lam, N: build_fd0(N),
    "HCM": lambda lam, N: build_hcm(lam, N),
    "Ud0": lambda lam, N: build_ud0(N),
    "UCM": lambda lam, N: build_ucm(lam, N),
    "FBplus": lambda lam, N: build_fbplus(),
    "Ubplus": lambda lam, N: build_ubplus(lam),
    "KHeis": lambda lam, N: build_kheis(lam),
    "UHeis": lambda lam, N: build_uheis(lam),
    "FBplusExt": lambda lam, N: build_fbplusext(lam, N),
    "HCMleft": lambda lam, N: build_hcmleft(N),
}


def build(tag: str, lam: Fraction = Q(1), N: int = 8) -> HopfAlgebra:
    if tag not in BUILDERS:
        raise KeyError(f"unknown algebra tag {tag!r}; known: {sorted(BUILDERS)}")
    return BUILDERS[tag](Q(lam), N)


# ---------------------------------------------------------------------------
# The delta <-> t dictionary
# ---------------------------------------------------------------------------

def delta_expr(n: int, N: Optional[int] = None) -> NCPoly:
    """delta_n as a polynomial in the t-generators (inside HCM(1)).

    delta_1 = 2 t_2 and delta_{n+1} = [X, delta_n].
    """
    if N is None:
        N = n + 2
    H = build_hcm(Q(1), N)
    d = H.normalize({(tname(2),): Q(2)})
    X = NCPoly.gen("X")
    for _ in range(n - 1):
        d = H.mul(X, d) - H.mul(d, X)
    return d


def _delta_monomials(max_grade: int) -> list[tuple[int, ...]]:
    """Multisets (sorted tuples) of delta-indices with total grade <= max."""
    out = []

    def rec(prefix, room, min_i):
        out.append(tuple(prefix))
        for i in range(min_i, room + 1):
            prefix.append(i)
            rec(prefix, room - i, i)
            prefix.pop()

    rec([], max_grade, 1)
    return out


def t_expr(n: int, N: Optional[int] = None) -> dict[tuple[int, ...], Fraction]:
    """t_n as a rational combination of products of delta-symbols.

    Returns a map from sorted index-tuples (i1,...,ik), meaning the product
    delta_{i1}...delta_{ik}, to coefficients.  Solved exactly by linear
    algebra on the grade-(n-1) slice and round-trip verified by the caller.
    """
    if N is None:
        N = n + 2
    grade = n - 1
    H = build_hcm(Q(1), N)
    deltas = {i: delta_expr(i, N) for i in range(1, grade + 1)}
    monos = [m for m in _delta_monomials(grade) if sum(m) == grade and m]
    images = []
    for m in monos:
        acc = NCPoly.unit()
        for i in m:
            acc = H.mul(acc, deltas[i])
        images.append(acc)
    # solve sum_j x_j images[j] = t_n over the t-word basis
    words = sorted({w for img in images for w in img.terms} | {(tname(n),)})
    rows = [[img.coeff(w) for img in images] for w in words]
    rhs = [Q(1) if w == (tname(n),) else Q(0) for w in words]
    sol = _solve_exact(rows, rhs)
    if sol is None:
        raise ValueError(f"t_{n} is not a combination of delta-monomials")
    return {m: c for m, c in zip(monos, sol) if c}


def _solve_exact(rows: list[list[Fraction]], rhs: list[Fraction]) -> Optional[list[Fraction]]:
    """Gaussian elimination over Q; returns one solution or None."""
    m = [row[:] + [b] for row, b in zip(rows, rhs)]
    nrows, ncols = len(m), len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if m[i][ncols]:
            return None
    sol = [Q(0)] * ncols
    for i, c in enumerate(pivots):
        sol[c] = m[i][ncols]
    return sol


# ---------------------------------------------------------------------------
# Heisenberg-type quotient of HCM
# ---------------------------------------------------------------------------

def heis_ideal_reduce(H: HopfAlgebra, x) -> NCPoly:
    """Image of x under the substitution retraction t_n -> t_2^{n-1}.

    The kernel of this algebra map is exactly the ideal generated by the
    elements t_n - t_2^{n-1} (n >= 3), so x is in the ideal iff this is 0.
    """
    out = NCPoly()
    from .core import _as_terms
    for w, c in _as_terms(x).items():
        new = []
        for g in w:
            if g.startswith("t") and g[1:].isdigit():
                new.extend([tname(2)] * (int(g[1:]) - 1))
            else:
                new.append(g)
        out = out + H.normalize(tuple(new)).scale(c)
    return out


def heis_quotient_map(H: HopfAlgebra, K: HopfAlgebra) -> HopfMorphism:
    """HCM(lam) -> KHeis(lam): t_n -> (t/2)^{n-1}, X -> X, Y -> Y."""
    images = {"X": NCPoly.gen("X"), "Y": NCPoly.gen("Y")}
    N = H.truncation or 8
    for n in range(2, N + 1):
        images[tname(n)] = NCPoly({("t",) * (n - 1): Q(1, 2 ** (n - 1))})
    return HopfMorphism(source=H, target=K, images=images, name="heis-quotient")


def heis_ideal_witness(H: HopfAlgebra, n: int):
    """Split Delta(t_n - t_2^{n-1}) as (terms in I (x) H) + (terms in H (x) I).

    Returns (left_part, right_part) with left_part having all first legs in
    the ideal I, right_part all second legs in I, and their sum equal to
    Delta(t_n - t_2^{n-1}).  Existence of this split *is* the coideal
    property; the caller should also check counit vanishing.
    """
    tn_tilde = NCPoly({(tname(n),): Q(1)}) - H.normalize({(tname(2),) * (n - 1): Q(1)})
    d = H.coproduct(tn_tilde)
    rho = lambda w: heis_ideal_reduce(H, NCPoly({w: Q(1)}))
    # right part: second leg w2 replaced by (w2 - rho(w2)) in I
    right = TensorPoly(H.pair)
    reduced = TensorPoly(H.pair)
    for (w1, w2), c in d.terms.items():
        r2 = rho(w2)
        right = right + (tensor_of(H.pair, NCPoly({w1: Q(1)}), NCPoly({w2: Q(1)}) - r2)).scale(c)
        reduced = reduced + tensor_of(H.pair, NCPoly({w1: Q(1)}), r2).scale(c)
    # left part: in the remainder, first leg w1 gets the same split;
    # the fully-reduced part (rho x rho)Delta must vanish identically.
    left = TensorPoly(H.pair)
    fully = TensorPoly(H.pair)
    for (w1, w2), c in reduced.terms.items():
        r1 = rho(w1)
        left = left + tensor_of(H.pair, NCPoly({w1: Q(1)}) - r1, NCPoly({w2: Q(1)})).scale(c)
        fully = fully + tensor_of(H.pair, r1, NCPoly({w2: Q(1)})).scale(c)
    if fully:
        raise ValueError(f"(rho x rho) Delta(t{n}~) != 0: not a coideal")
    return left, right


# ---------------------------------------------------------------------------
# Scaling isomorphisms
# ---------------------------------------------------------------------------

def hcm_scaling(lam: Fraction, N: int = 8) -> tuple[HopfMorphism, HopfMorphism]:
    """Mutually inverse maps HCM(1) <-> HCM(lam) (lam != 0).

    Forward: X -> lam^-2 X, Y -> lam^-1 Y, t_n -> lam^{1-n} t_n.
    """
    lam = Q(lam)
    if not lam:
        raise ValueError("scaling isomorphism needs lam != 0")
    H1, Hl = build_hcm(Q(1), N), build_hcm(lam, N)
    fwd = {"X": NCPoly({("X",): lam ** -2}), "Y": NCPoly({("Y",): lam ** -1})}
    bwd = {"X": NCPoly({("X",): lam ** 2}), "Y": NCPoly({("Y",): lam})}
    for n in range(2, N + 1):
        fwd[tname(n)] = NCPoly({(tname(n),): lam ** (1 - n)})
        bwd[tname(n)] = NCPoly({(tname(n),): lam ** (n - 1)})
    return (HopfMorphism(H1, Hl, fwd, name=f"hcm-scale({lam})"),
            HopfMorphism(Hl, H1, bwd, name=f"hcm-scale({lam})^-1"))


def ucm_scaling(lam: Fraction, N: int = 8) -> tuple[HopfMorphism, HopfMorphism]:
    """Mutually inverse maps UCM(1) <-> UCM(lam) (lam != 0).

    Forward: z_n -> lam^{n-1} z_n, alpha -> alpha, beta -> lam^2 beta.
    """
    lam = Q(lam)
    if not lam:
        raise ValueError("scaling isomorphism needs lam != 0")
    U1, Ul = build_ucm(Q(1), N), build_ucm(lam, N)
    fwd = {"alpha": NCPoly.gen("alpha"), "alphaInv": NCPoly.gen("alphaInv"),
           "beta": NCPoly({("beta",): lam ** 2})}
    bwd = {"alpha": NCPoly.gen("alpha"), "alphaInv": NCPoly.gen("alphaInv"),
           "beta": NCPoly({("beta",): lam ** -2})}
    for n in range(2, N + 1):
        fwd[zname(n)] = NCPoly({(zname(n),): lam ** (n - 1)})
        bwd[zname(n)] = NCPoly({(zname(n),): lam ** (1 - n)})
    return (HopfMorphism(U1, Ul, fwd, name=f"ucm-scale({lam})"),
            HopfMorphism(Ul, U1, bwd, name=f"ucm-scale({lam})^-1"))
