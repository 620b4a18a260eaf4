"""Left module-algebra actions of the deformation-family duals on U(b+),
and the dual comodule-algebra coactions.

The action tables are finite; the action of a word is the iterated action
of its letters, and the action on a product follows the module-algebra law
through the actor's coproduct.  The coaction is the multiplicative
extension of its generator table.  Every structural claim is re-verified
mechanically: module axioms, module-algebra law, comodule axioms,
action/coaction duality through the pairing, and the restriction of the
coaction along the Heisenberg quotient.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple

from .core import NCPoly, TensorPoly, Word, tensor_mul, tensor_of
from .hopf import AxiomReport, HopfAlgebra, HopfMorphism
from . import family as fam
from .pairing import Pairing, pairing_ucm_hcm, pairing_uheis_kheis

Q = Fraction


@dataclass
class SchrodingerData:
    """Action of ``actor`` on ``space`` with dual coaction of ``coactor``."""

    actor: HopfAlgebra
    space: HopfAlgebra
    action: Dict[Tuple[str, str], NCPoly]     # (actor gen, space gen) -> space
    coactor: HopfAlgebra
    coaction: Dict[str, TensorPoly]           # space gen -> space (x) coactor
    pairing: Pairing                          # actor vs coactor
    _act_cache: Dict[Tuple[str, Word], NCPoly] = field(default_factory=dict,
                                                       repr=False)
    _coact_cache: Dict[Word, TensorPoly] = field(default_factory=dict,
                                                 repr=False)


def _act_gen_word(D: SchrodingerData, g: str, w: Word) -> NCPoly:
    """g |> w for a single actor generator and a space word."""
    key = (g, w)
    hit = D._act_cache.get(key)
    if hit is not None:
        return hit
    if not w:
        out = NCPoly({(): D.actor.gen_counit(g)})
    elif len(w) == 1:
        out = D.space.normalize(D.action[(g, w[0])])
    else:
        head, rest = w[0], w[1:]
        out = NCPoly()
        for (l1, l2), c in D.actor.gen_coproduct(g).terms.items():
            left = act(D, NCPoly({l1: Q(1)}), NCPoly({(head,): Q(1)}))
            if not left.terms:
                continue
            right = act(D, NCPoly({l2: Q(1)}), NCPoly({rest: Q(1)}))
            if not right.terms:
                continue
            out = out + D.space.mul(left, right).scale(c)
        out = D.space.normalize(out)
    D._act_cache[key] = out
    return out


def act(D: SchrodingerData, u, phi) -> NCPoly:
    """u |> phi for u in the actor and phi in the space.

    Words act letter by letter, rightmost letter first, so that
    (uv) |> phi = u |> (v |> phi).
    """
    if isinstance(u, NCPoly):
        uterms = u.terms
    else:
        uterms = {tuple(u): Q(1)}
    phi = D.space.normalize(phi if isinstance(phi, NCPoly) else
                            NCPoly({tuple(phi): Q(1)}))
    out = NCPoly()
    for uw, cu in uterms.items():
        for pw, cp in phi.terms.items():
            cur = NCPoly({pw: Q(1)})
            for g in reversed(uw):
                nxt = NCPoly()
                for w, c in cur.terms.items():
                    nxt = nxt + _act_gen_word(D, g, w).scale(c)
                cur = D.space.normalize(nxt)
                if not cur.terms:
                    break
            out = out + cur.scale(cu * cp)
    return D.space.normalize(out)


def coact(D: SchrodingerData, phi) -> TensorPoly:
    """Multiplicative extension of the generator coaction table."""
    phi = D.space.normalize(phi if isinstance(phi, NCPoly) else
                            NCPoly({tuple(phi): Q(1)}))
    owners = (D.space, D.coactor)
    out = TensorPoly(owners)
    one = tensor_of(owners, NCPoly({(): Q(1)}), NCPoly({(): Q(1)}))
    for w, c in phi.terms.items():
        hit = D._coact_cache.get(w)
        if hit is None:
            cur = one
            for g in w:
                cur = tensor_mul(cur, D.coaction[g])
            D._coact_cache[w] = cur
            hit = cur
        out = out + hit.scale(c)
    return out.normalized()


# -- canned data -----------------------------------------------------------


def _p(alg: HopfAlgebra, expr: Dict[Word, Fraction]) -> NCPoly:
    return alg.normalize(NCPoly({w: Q(c) for w, c in expr.items()}))


def ucm_on_ubplus(N: int = 8) -> SchrodingerData:
    """The action of the parameter-1 enveloping dual on U(b+) together
    with its dual coaction."""
    actor = fam.build_ucm(Q(1), N)
    space = fam.build_ubplus(Q(1))
    coactor = fam.build_hcm(Q(1), N)
    action: Dict[Tuple[str, str], NCPoly] = {}
    for g in actor.generators:
        if g.startswith("z"):
            n = int(g[1:])
            action[(g, "X")] = _p(space, {("Y",): Q(2)}) if n == 2 else NCPoly()
            action[(g, "Y")] = NCPoly()
    action[("alpha", "X")] = _p(space, {("X",): Q(1)})
    action[("alpha", "Y")] = _p(space, {("Y",): Q(1), (): Q(1)})
    action[("alphaInv", "X")] = _p(space, {("X",): Q(1)})
    action[("alphaInv", "Y")] = _p(space, {("Y",): Q(1), (): Q(-1)})
    action[("beta", "X")] = _p(space, {(): Q(1)})
    action[("beta", "Y")] = NCPoly()
    owners = (space, coactor)
    coaction = {
        "X": tensor_of(owners, _p(space, {("X",): Q(1)}), _p(coactor, {(): Q(1)}))
        + tensor_of(owners, _p(space, {(): Q(1)}), _p(coactor, {("X",): Q(1)}))
        + tensor_of(owners, _p(space, {("Y",): Q(1)}), _p(coactor, {("t2",): Q(2)})),
        "Y": tensor_of(owners, _p(space, {("Y",): Q(1)}), _p(coactor, {(): Q(1)}))
        + tensor_of(owners, _p(space, {(): Q(1)}), _p(coactor, {("Y",): Q(1)})),
    }
    pairing = pairing_ucm_hcm(actor, coactor)
    return SchrodingerData(actor, space, action, coactor, coaction, pairing)


def uheis_on_ubplus(lam: Fraction) -> SchrodingerData:
    """Heisenberg-level action on U(b+) at a nonzero parameter."""
    lam = Q(lam)
    if lam == 0:
        raise ValueError("Heisenberg action table requires a nonzero parameter")
    actor = fam.build_uheis(lam)
    space = fam.build_ubplus(lam)
    coactor = fam.build_kheis(lam)
    action: Dict[Tuple[str, str], NCPoly] = {
        ("z", "X"): _p(space, {("Y",): 2 * lam}),
        ("z", "Y"): NCPoly(),
        ("alpha", "X"): _p(space, {("X",): Q(1)}),
        ("alpha", "Y"): _p(space, {("Y",): Q(1), (): lam}),
        ("alphaInv", "X"): _p(space, {("X",): Q(1)}),
        ("alphaInv", "Y"): _p(space, {("Y",): Q(1), (): -lam}),
        ("beta", "X"): _p(space, {(): lam}),
        ("beta", "Y"): NCPoly(),
    }
    owners = (space, coactor)
    coaction = {
        "X": tensor_of(owners, _p(space, {("X",): Q(1)}), _p(coactor, {(): Q(1)}))
        + tensor_of(owners, _p(space, {(): Q(1)}), _p(coactor, {("X",): Q(1)}))
        + tensor_of(owners, _p(space, {("Y",): Q(1)}), _p(coactor, {("t",): Q(1)})),
        "Y": tensor_of(owners, _p(space, {("Y",): Q(1)}), _p(coactor, {(): Q(1)}))
        + tensor_of(owners, _p(space, {(): Q(1)}), _p(coactor, {("Y",): Q(1)})),
    }
    pairing = pairing_uheis_kheis(actor, coactor, lam)
    return SchrodingerData(actor, space, action, coactor, coaction, pairing)


# -- verification ----------------------------------------------------------


def check_module_algebra(D: SchrodingerData, grade_bound: int = 4) -> AxiomReport:
    """Module axioms over actor relations, well-definedness over space
    relations, unit/counit normalisations."""
    rep = AxiomReport(algebra="schrodinger:%s|%s" % (D.actor.name, D.space.name))
    sb = [w for w in D.space.basis(grade_bound)]

    # the actor's relations act consistently: (gh) |> phi via the rule rhs
    for (g, h), rhs in D.actor.rules.items():
        if not isinstance(rhs, dict):
            continue
        rhs = NCPoly(rhs)
        for w in sb:
            phi = NCPoly({w: Q(1)})
            lhs = act(D, NCPoly({(g, h): Q(1)}), phi)
            rhsv = act(D, rhs, phi)
            rep.record("actor-rule:%s%s|%s" % (g, h, (w,)), lhs == rhsv,
                       str((lhs.terms, rhsv.terms)))
    # unit of the actor acts as identity; counit normalisation
    for w in sb[: 40]:
        phi = NCPoly({w: Q(1)})
        rep.record("unit:%s" % (w,), act(D, NCPoly({(): Q(1)}), phi) == phi)
    # module-algebra law on products: u |> (phi psi) = sum (u1|>phi)(u2|>psi)
    gens2 = [(g,) for g in D.actor.generators]
    small = [w for w in sb if len(w) <= 2]
    for uw in gens2:
        cop = D.actor.gen_coproduct(uw[0])
        for w1 in small:
            for w2 in small:
                prod = D.space.mul(NCPoly({w1: Q(1)}), NCPoly({w2: Q(1)}))
                lhs = act(D, NCPoly({uw: Q(1)}), prod)
                rhs = NCPoly()
                for (l1, l2), c in cop.terms.items():
                    a = act(D, NCPoly({l1: Q(1)}), NCPoly({w1: Q(1)}))
                    if not a.terms:
                        continue
                    b = act(D, NCPoly({l2: Q(1)}), NCPoly({w2: Q(1)}))
                    if not b.terms:
                        continue
                    rhs = rhs + D.space.mul(a, b).scale(c)
                rhs = D.space.normalize(rhs)
                rep.record("modalg:%s|%s,%s" % (uw[0], w1, w2), lhs == rhs,
                           str((lhs.terms, rhs.terms)))
    # well-defined across space rewriting
    for (g, h), rhs in D.space.rules.items():
        if not isinstance(rhs, dict):
            continue
        rhs = NCPoly(rhs)
        for ug in D.actor.generators:
            lhs = _act_gen_word(D, ug, (g, h))
            rhsv = act(D, NCPoly({(ug,): Q(1)}), rhs)
            rep.record("space-rule:%s|%s%s" % (ug, g, h), lhs == rhsv,
                       str((lhs.terms, rhsv.terms)))
    return rep


def check_comodule(D: SchrodingerData, grade_bound: int = 3) -> AxiomReport:
    """Comodule-algebra axioms for the coaction."""
    rep = AxiomReport(algebra="coaction:%s|%s" % (D.space.name, D.coactor.name))
    for w in D.space.basis(grade_bound):
        cw = coact(D, NCPoly({w: Q(1)}))
        # counit leg: (id (x) eps) coact = id
        back = NCPoly()
        for (l1, l2), c in cw.terms.items():
            e = Q(1)
            for g in l2:
                e *= D.coactor.gen_counit(g)
                if e == 0:
                    break
            if e:
                back = back + NCPoly({l1: c * e})
        rep.record("counit:%s" % (w,), back ==
                   D.space.normalize(NCPoly({w: Q(1)})))
        # coassociativity with the coactor's coproduct
        left = cw.apply_to_leg(0, lambda word: coact(D, NCPoly({word: Q(1)})))
        right = cw.apply_to_leg(1, lambda word: D.coactor.coproduct_word(word))
        rep.record("coassoc:%s" % (w,), left == right)
    # well-defined across space rewriting
    for (g, h), rhs in D.space.rules.items():
        if not isinstance(rhs, dict):
            continue
        rhs = NCPoly(rhs)
        lhs = tensor_mul(coact(D, NCPoly({(g,): Q(1)})),
                         coact(D, NCPoly({(h,): Q(1)})))
        rep.record("rule:%s%s" % (g, h), lhs == coact(D, rhs))
    return rep


def check_action_coaction_duality(D: SchrodingerData,
                                  word_bound: int = 2,
                                  grade_bound: int = 3) -> AxiomReport:
    """u |> phi = sum phi^(0) <u, phi^(1)> through the pairing."""
    rep = AxiomReport(algebra="act-coact-duality:%s" % D.actor.name)
    uwords = [w for w in D.actor.basis(grade_bound) if len(w) <= word_bound]
    for w in D.space.basis(grade_bound):
        cw = coact(D, NCPoly({w: Q(1)}))
        for uw in uwords:
            lhs = act(D, NCPoly({uw: Q(1)}), NCPoly({w: Q(1)}))
            rhs = NCPoly()
            for (l1, l2), c in cw.terms.items():
                v = D.pairing.pair_words(uw, l2)
                if v:
                    rhs = rhs + NCPoly({l1: c * v})
            rhs = D.space.normalize(rhs)
            rep.record("dual:%s|%s" % (uw, w), lhs == rhs,
                       str((lhs.terms, rhs.terms)))
    return rep


def check_quotient_restriction(grade_bound: int = 3) -> AxiomReport:
    """The coaction through the full dual restricts along the Heisenberg
    quotient to the Heisenberg coaction (parameter 1 tables)."""
    rep = AxiomReport(algebra="coaction-quotient")
    Dfull = ucm_on_ubplus()
    Dheis = uheis_on_ubplus(Q(1))
    quot = fam.heis_quotient_map(Dfull.coactor, Dheis.coactor)
    owners = (Dheis.space, Dheis.coactor)
    for w in Dfull.space.basis(grade_bound):
        cw = coact(Dfull, NCPoly({w: Q(1)}))
        pushed = TensorPoly(owners)
        for (l1, l2), c in cw.terms.items():
            img = quot.apply_word(l2)
            pushed = pushed + tensor_of(owners, NCPoly({l1: c}), img)
        target = coact(Dheis, NCPoly({w: Q(1)}))
        rep.record("restrict:%s" % (w,), pushed.normalized() == target,
                   str((pushed.terms, target.terms)))
    return rep


def check_scaling_consistency(lam: Fraction, grade_bound: int = 3) -> AxiomReport:
    """The Heisenberg action table is the parameter-scaled image of the
    parameter-1 table: sigma(u |>_lam phi) = rho(u) |>_1 sigma(phi) with
    sigma: X -> X, Y -> lam*Y and rho: z -> lam^2 z2, alpha -> alpha,
    beta -> lam*beta."""
    lam = Q(lam)
    if lam == 0:
        raise ValueError("scaling consistency needs a nonzero parameter")
    rep = AxiomReport(algebra="schrodinger-scaling")
    Dl = uheis_on_ubplus(lam)
    D1 = ucm_on_ubplus()
    sigma = HopfMorphism(Dl.space, D1.space, {
        "X": NCPoly({("X",): Q(1)}),
        "Y": NCPoly({("Y",): lam}),
    })
    rho_images = {
        "z": NCPoly({("z2",): lam * lam}),
        "alpha": NCPoly({("alpha",): Q(1)}),
        "alphaInv": NCPoly({("alphaInv",): Q(1)}),
        "beta": NCPoly({("beta",): lam}),
    }
    for ug in Dl.actor.generators:
        for w in Dl.space.basis(grade_bound):
            phi = NCPoly({w: Q(1)})
            lhs = sigma.apply(act(Dl, NCPoly({(ug,): Q(1)}), phi))
            rhs = act(D1, rho_images[ug], sigma.apply(phi))
            rep.record("scaling:%s|%s" % (ug, w), lhs == rhs,
                       str((lhs.terms, rhs.terms)))
    return rep


def check_pairing_translation_duality(N: int = 8) -> AxiomReport:
    """<h |> phi, a> = <phi, a <| h>: the action is pairing-dual to the
    right translation action on the function side."""
    from . import bicross as bx
    from .pairing import pairing_ubplus_fbplus
    rep = AxiomReport(algebra="translation-duality")
    D = ucm_on_ubplus(N)
    data = bx.ucm_data(Q(1), N)
    P = pairing_ubplus_fbplus(D.space, data.A)
    hgens = [g for g in data.H.generators]
    for h in hgens:
        for phig in ["X", "Y"]:
            for ag in ["alpha", "alphaInv", "beta"]:
                hp = act(D, NCPoly({(h,): Q(1)}), NCPoly({(phig,): Q(1)}))
                lhs = P.pair(hp, NCPoly({(ag,): Q(1)}))
                moved = bx.rl_act(data, NCPoly({(ag,): Q(1)}),
                                  NCPoly({(h,): Q(1)}))
                rhs = P.pair(NCPoly({(phig,): Q(1)}), moved)
                rep.record("trans:%s|%s|%s" % (h, phig, ag), lhs == rhs,
                           str((lhs, rhs)))
    return rep
