"""Named verification suites shared by the command-line tool and the tests.

Each suite function returns a list of :class:`CheckResult` records with a
stable check id, a pass/fail/skip status, and (on failure) an exact witness
string.  ``run_all`` executes every suite and is the single entry point for
the full verification report.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import bicross, family as fam, finitegroup, fodc, hopf, liematched
from . import pairing as pr
from . import schrodinger as sch
from .core import NCPoly, TensorPoly
from .hopf import AxiomReport

Q = Fraction

LAMBDA_GRID = (Q(0), Q(1), Q(-1), Q(1, 2))
NONZERO_LAMBDAS = (Q(1), Q(-1), Q(1, 2))
SCALING_LAMBDAS = (Q(1), Q(-1), Q(1, 2), Q(3))

# algebra tags whose construction requires a nonzero parameter
_NONZERO_ONLY = ("UHeis",)


@dataclass
class CheckResult:
    suite: str
    check_id: str
    status: str            # "pass" | "fail" | "skip"
    witness: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def line(self) -> str:
        out = f"[{self.status.upper():4s}] {self.suite} :: {self.check_id}"
        if self.witness:
            out += f" :: {self.witness}"
        return out


def _from_report(suite: str, check_id: str, rep: AxiomReport) -> CheckResult:
    if rep.ok:
        return CheckResult(suite, check_id, "pass")
    lab, detail = rep.failures[0]
    return CheckResult(suite, check_id, "fail",
                       f"{len(rep.failures)} failures; first {lab}: {detail}")


def _plain(suite: str, check_id: str, ok: bool, witness: str = "") -> CheckResult:
    return CheckResult(suite, check_id, "pass" if ok else "fail",
                       "" if ok else witness)


# ---------------------------------------------------------------------------
# suite: hopf -- axiom sweep over the whole algebra family
# ---------------------------------------------------------------------------

def suite_hopf(lams: Sequence[Fraction] = LAMBDA_GRID, N: int = 8,
               grade_bound: int = 4) -> List[CheckResult]:
    out: List[CheckResult] = []
    for tag in sorted(fam.BUILDERS):
        for lam in lams:
            cid = f"axioms[{tag},lam={lam}]"
            if lam == 0 and tag in _NONZERO_ONLY:
                out.append(CheckResult("hopf", cid, "skip",
                                       "needs a nonzero parameter"))
                continue
            H = fam.build(tag, Q(lam), N)
            rep = hopf.check_hopf_axioms(H, grade_bound=grade_bound)
            out.append(_from_report("hopf", cid, rep))
    return out


# ---------------------------------------------------------------------------
# suite: bicross -- the generic double-construction reproduces every table
# ---------------------------------------------------------------------------

def _bicross_data_map(N: int = 8):
    return {
        "HCM": lambda lam: bicross.hcm_data(lam, N),
        "UCM": lambda lam: bicross.ucm_data(lam, N),
        "KHeis": lambda lam: bicross.kheis_data(lam),
        "UHeis": lambda lam: bicross.uheis_data(lam),
        "FBplusExt": lambda lam: bicross.fbplusext_data(lam, N),
        "HCMleft": lambda lam: bicross.hcmleft_data(N),
    }


def suite_bicross(lam: Fraction = Q(1), N: int = 8) -> List[CheckResult]:
    out: List[CheckResult] = []
    data_map = _bicross_data_map(N)
    for tag in ("HCM", "UCM", "KHeis", "UHeis", "HCMleft"):
        mk = data_map[tag]
        B = bicross.build_bicrossproduct(mk(Q(lam)), tag=tag)
        F = fam.build(tag, Q(lam), N)
        rep = bicross.compare_hopf(B, F)
        out.append(_from_report("bicross", f"reproduce[{tag},lam={lam}]", rep))
    return out


# ---------------------------------------------------------------------------
# suite: compat -- action/coaction compatibility plus mutation sensitivity
# ---------------------------------------------------------------------------

def _mutations(data: bicross.BicrossData):
    """Three independent table corruptions that must each be detected."""
    key = sorted(data.action)[0]
    one = NCPoly({(): Q(1)})
    yield ("action+1", bicross.mutate_action(data, key, one))
    cur = data.action_on(*key)
    bump = cur + one if cur else one + NCPoly({key[1:]: Q(1)})
    yield ("action+entry", bicross.mutate_action(data, key, bump))
    g = sorted(data.coaction)[0]
    base = data.coaction[g]
    delta = TensorPoly(base.owners, {((), ()): Q(1)})
    yield ("coaction+unit", bicross.mutate_coaction(data, g, delta))


def suite_compat(lam: Fraction = Q(1), N: int = 8) -> List[CheckResult]:
    out: List[CheckResult] = []
    for tag, mk in _bicross_data_map(N).items():
        if tag in ("KHeis", "HCMleft"):   # covered via their mirror partners
            continue
        data = mk(Q(lam))
        rep = bicross.check_compatibility(data)
        out.append(_from_report("compat", f"conditions[{tag},lam={lam}]", rep))
        for mlabel, bad in _mutations(data):
            mrep = bicross.check_compatibility(bad)
            detected = (not mrep.ok) and any(
                "residual {" in d and "residual {}" not in d
                for _, d in mrep.failures)
            out.append(_plain(
                "compat", f"mutation[{tag},{mlabel}]", detected,
                "mutation was not detected with a nonzero witness"))
            if detected:
                lab, det = mrep.failures[0]
                out[-1].witness = f"detected at {lab}"
    return out


# ---------------------------------------------------------------------------
# suite: pairing -- duality axioms and closed forms vs. the recursion
# ---------------------------------------------------------------------------

def _pairings(N: int = 8):
    lam = Q(2)
    return [
        ("Ud0/FD0", pr.pairing_ud0_fd0(fam.build_ud0(N), fam.build_fd0(N))),
        ("Ubplus/FBplus", pr.pairing_ubplus_fbplus(
            fam.build_ubplus(Q(1)), fam.build_fbplus())),
        ("UCM/HCM", pr.pairing_ucm_hcm(
            fam.build_ucm(Q(1), N), fam.build_hcm(Q(1), N))),
        ("UHeis/KHeis", pr.pairing_uheis_kheis(
            fam.build_uheis(lam), fam.build_kheis(lam), lam)),
    ]


def _zname(n: int) -> str:
    return fam.zname(n)


def _tname(n: int) -> str:
    return fam.tname(n)


def suite_pairing(grade_bound: int = 3, N: int = 8) -> List[CheckResult]:
    out: List[CheckResult] = []
    for label, P in _pairings(N):
        rep = pr.check_duality(P, grade_bound=grade_bound)
        out.append(_from_report("pairing", f"duality[{label}]", rep))
        if label == "Ud0/FD0":  # the only pair with finite graded slices
            rep2 = pr.check_vanishing_sweeps(P, grade_bound=4)
            out.append(_from_report("pairing", f"vanishing[{label}]", rep2))
    out.extend(_closed_form_checks())
    return out


def _closed_form_checks(max_index: int = 6) -> List[CheckResult]:
    """Closed pairing formulas agree with the recursive evaluation."""
    out: List[CheckResult] = []
    Nbig = 3 * max_index
    U = fam.build_ucm(Q(1), Nbig)
    F = fam.build_hcm(Q(1), Nbig)
    P = pr.pairing_ucm_hcm(U, F)

    bad = []
    for p in (1, 2, 3):
        for ms in itertools.product(range(2, max_index + 1), repeat=p):
            for n in range(2, max_index + 1):
                lhs = pr.zword_tn_closed(ms, n)
                rhs = P.pair_words(tuple(_zname(m) for m in ms), (_tname(n),))
                if lhs != rhs:
                    bad.append((ms, n, lhs, rhs))
    out.append(_plain("pairing", "closed[zword-vs-single-t]", not bad,
                      f"first mismatch {bad[0]}" if bad else ""))

    bad = []
    for m in range(2, max_index + 1):
        for p in (1, 2, 3):
            for ns in itertools.product(range(2, max_index + 1), repeat=p):
                lhs = pr.zm_tword_closed(m, ns)
                rhs = P.pair_words((_zname(m),),
                                   tuple(_tname(n) for n in sorted(ns)))
                if lhs != rhs:
                    bad.append((m, ns, lhs, rhs))
    out.append(_plain("pairing", "closed[single-z-vs-tword]", not bad,
                      f"first mismatch {bad[0]}" if bad else ""))

    bad = []
    idxs = list(range(2, max_index + 1))
    for p in (1, 2):
        for combo in itertools.combinations(idxs, p):
            for mults in itertools.product((1, 2, 3), repeat=p):
                lhs = pr.diag_closed(mults)
                uw = tuple(itertools.chain.from_iterable(
                    (_zname(m),) * a for m, a in zip(combo, mults)))
                fw = tuple(itertools.chain.from_iterable(
                    (_tname(m),) * a for m, a in zip(combo, mults)))
                rhs = P.pair_words(uw, fw)
                if lhs != rhs:
                    bad.append((combo, mults, lhs, rhs))
    out.append(_plain("pairing", "closed[diagonal-factorials]", not bad,
                      f"first mismatch {bad[0]}" if bad else ""))

    bad = []
    for j in range(0, 4):
        for k in range(0, 4):
            for r in range(0, 4):
                for q in range(-3, 4):
                    lhs = pr.xy_ab_closed(j, k, Q(q), r)
                    uword = (("alpha",) * q if q >= 0
                             else ("alphaInv",) * (-q)) + ("beta",) * r
                    fword = ("X",) * j + ("Y",) * k
                    rhs = P.pair(U.normalize({uword: Q(1)}),
                                 F.normalize({fword: Q(1)}))
                    if lhs != rhs:
                        bad.append((j, k, q, r, lhs, rhs))
    out.append(_plain("pairing", "closed[xy-vs-alpha-beta]", not bad,
                      f"first mismatch {bad[0]}" if bad else ""))

    lam = Q(2)
    UH, KH = fam.build_uheis(lam), fam.build_kheis(lam)
    PH = pr.pairing_uheis_kheis(UH, KH, lam)
    bad = []
    rng3 = range(0, 4)
    for i, j, k, p, r in itertools.product(rng3, rng3, rng3, rng3, rng3):
        for q in range(-2, 3):
            lhs = pr.heis_closed(lam, i, j, k, p, q, r)
            uword = (("z",) * p
                     + (("alpha",) * q if q >= 0 else ("alphaInv",) * (-q))
                     + ("beta",) * r)
            fword = ("t",) * i + ("X",) * j + ("Y",) * k
            rhs = PH.pair(UH.normalize({uword: Q(1)}),
                          KH.normalize({fword: Q(1)}))
            if lhs != rhs:
                bad.append((i, j, k, p, q, r, lhs, rhs))
    out.append(_plain("pairing", "closed[heisenberg]", not bad,
                      f"first mismatch {bad[0]}" if bad else ""))
    return out


# ---------------------------------------------------------------------------
# suite: nondegenerate -- graded Gram ranks and determinants
# ---------------------------------------------------------------------------

GRAM_DIMS = (1, 1, 2, 3, 5, 7)
GRAM_DETS = (Q(1), Q(1), Q(2), Q(6), Q(96), Q(2880))


def suite_nondegenerate(N: int = 8) -> List[CheckResult]:
    out: List[CheckResult] = []
    P = pr.pairing_ud0_fd0(fam.build_ud0(N), fam.build_fd0(N))
    for g in range(6):
        rank, dl, dr, det = pr.gram_rank(P, g)
        ok = (dl == dr == GRAM_DIMS[g] and rank == dl
              and (det == GRAM_DETS[g] or (g == 0 and det in (None, Q(1)))))
        out.append(_plain(
            "nondegenerate", f"gram[grade={g}]", ok,
            f"rank={rank} dims=({dl},{dr}) det={det}; expected "
            f"dim={GRAM_DIMS[g]} det={GRAM_DETS[g]}"))
    return out


# ---------------------------------------------------------------------------
# suite: ideal -- the Hopf ideal and the Heisenberg quotient
# ---------------------------------------------------------------------------

def suite_ideal(lams: Sequence[Fraction] = NONZERO_LAMBDAS,
                N: int = 8) -> List[CheckResult]:
    out: List[CheckResult] = []
    for lam in lams:
        H = fam.build_hcm(Q(lam), N)
        K = fam.build_kheis(Q(lam))
        for n in range(3, N + 1):
            cid = f"coideal[n={n},lam={lam}]"
            try:
                left, right = fam.heis_ideal_witness(H, n)
            except ValueError as e:
                out.append(_plain("ideal", cid, False, str(e)))
                continue
            tn = (NCPoly({(fam.tname(n),): Q(1)})
                  - H.normalize({(fam.tname(2),) * (n - 1): Q(1)}))
            total = left + right
            ok = (total.terms == H.coproduct(tn).terms
                  and H.counit(tn) == 0)
            out.append(_plain("ideal", cid, ok,
                              "witness split or counit mismatch"))
        m = fam.heis_quotient_map(H, K)
        rep = hopf.check_morphism(m)
        out.append(_from_report("ideal", f"quotient[lam={lam}]", rep))
    return out


# ---------------------------------------------------------------------------
# suite: scaling -- parameter-scaling isomorphisms
# ---------------------------------------------------------------------------

def suite_scaling(lams: Sequence[Fraction] = SCALING_LAMBDAS,
                  N: int = 8) -> List[CheckResult]:
    out: List[CheckResult] = []
    for label, mk in (("HCM", fam.hcm_scaling), ("UCM", fam.ucm_scaling)):
        for lam in lams:
            f, g = mk(Q(lam), N)
            repf = hopf.check_morphism(f)
            repg = hopf.check_morphism(g)
            repi = hopf.check_inverse_pair(f, g)
            for tag, rep in (("fwd", repf), ("bwd", repg), ("inv", repi)):
                out.append(_from_report(
                    "scaling", f"{label}[lam={lam},{tag}]", rep))
    return out


# ---------------------------------------------------------------------------
# suite: fodc -- classification of covariant differential calculi
# ---------------------------------------------------------------------------

def _fixed_2d_block(K, lam: Fraction):
    lam = Q(lam)
    return {
        ("dX", "X"): fodc._of(K, {(("X",), "dX"): Q(1)}),
        ("dX", "Y"): fodc._of(K, {(("Y",), "dX"): Q(1), ((), "dX"): -lam / 2}),
        ("dY", "X"): fodc._of(K, {(("X",), "dY"): Q(1), ((), "dX"): lam / 2}),
        ("dY", "Y"): fodc._of(K, {(("Y",), "dY"): Q(1), ((), "dY"): lam / 2}),
    }


def classify_2d(lam: Fraction, D: int = 3) -> List[fodc.FODCSpec]:
    base = fam.build_ubplus(Q(lam))
    _, cov = fodc.cov_ubplus_kheis(Q(lam))
    return fodc.classify(base, ("dX", "dY"), "right", D, cov)


def classify_3d_extensions(lam: Fraction, D: int = 3) -> List[fodc.FODCSpec]:
    K, cov = fodc.cov_kheis_self(Q(lam))
    return fodc.classify(K, ("dX", "dY", "dt"), "right", D, cov,
                         fixed_entries=_fixed_2d_block(K, lam),
                         sub_forms=["dt"])


def classify_3d_bicovariant(lam: Fraction, D: int = 3) -> List[fodc.FODCSpec]:
    K, cov = fodc.cov_kheis_self(Q(lam))
    return fodc.classify(K, ("dX", "dY", "dt"), "bi", D, cov,
                         fixed_entries=_fixed_2d_block(K, lam),
                         sub_forms=["dt"])


def classify_4d_bicovariant(lam: Fraction, D: int = 3) -> List[fodc.FODCSpec]:
    K, cov = fodc.cov_kheis_self(Q(lam))
    return fodc.classify(K, ("dX", "dY", "dt", "theta"), "bi", D, cov,
                         fixed_entries=_fixed_2d_block(K, lam),
                         sub_forms=["dt"])


def suite_fodc(lams: Sequence[Fraction] = NONZERO_LAMBDAS) -> List[CheckResult]:
    out: List[CheckResult] = []
    for lam in lams:
        sols = classify_2d(lam)
        ok = len(sols) == 1 and fodc.same_tables(sols[0], fodc.calc_2d(lam))
        out.append(_plain("fodc", f"2d-unique[lam={lam}]", ok,
                          f"{len(sols)} solutions"))
        sols4 = classify_2d(lam, D=4)
        ok = len(sols4) == 1 and fodc.same_tables(sols4[0], sols[0])
        out.append(_plain("fodc", f"2d-degree-stable[lam={lam}]", ok,
                          f"{len(sols4)} solutions at degree 4"))

        exts = classify_3d_extensions(lam)
        want = [fodc.calc_3d_right(lam, Q(0)),
                fodc.calc_3d_right(lam, Q(lam) / 2)]
        matched = (len(exts) == 2 and all(
            any(fodc.same_tables(s, w) for s in exts) for w in want))
        out.append(_plain("fodc", f"3d-two-extensions[lam={lam}]", matched,
                          f"{len(exts)} solutions"))
        if len(exts) == 2:
            out.append(_plain(
                "fodc", f"3d-noniso[lam={lam}]",
                fodc.check_noniso_scaling_dt(exts[0], exts[1]),
                "solutions related by a dt-scaling"))
        exts4 = classify_3d_extensions(lam, D=4)
        ok = (len(exts4) == 2 and all(
            any(fodc.same_tables(s, w) for s in exts4) for w in exts))
        out.append(_plain("fodc", f"3d-degree-stable[lam={lam}]", ok,
                          f"{len(exts4)} solutions at degree 4"))

        out.append(_plain("fodc", f"3d-bicovariant-empty[lam={lam}]",
                          not classify_3d_bicovariant(lam),
                          "unexpected bicovariant solution"))
        out.append(_plain("fodc", f"4d-bicovariant-empty[lam={lam}]",
                          not classify_4d_bicovariant(lam),
                          "unexpected bicovariant solution"))
        out.append(_plain(
            "fodc", f"4d-sub-bimodule-obstruction[lam={lam}]",
            fodc.check_4d_sub2d_obstruction(lam),
            "the constrained linear system was unexpectedly solvable"))

    out.append(_plain("fodc", "4d-sub-bimodule-obstruction[lam=0]",
                      not fodc.check_4d_sub2d_obstruction(Q(0)),
                      "expected a solvable system at parameter 0"))

    for lam in (Q(0),) + tuple(NONZERO_LAMBDAS):
        sp = fodc.oeckl(Q(lam))
        _, cov = fodc.cov_ubplus_kheis(Q(lam))
        rep, wit = fodc.check_covariance(sp, cov, "right")
        if lam == 0:
            out.append(_plain("fodc", "flat-covariant[lam=0]", rep.ok,
                              f"witnesses {wit}"))
        else:
            expect = {((), "dX", ("t",)): Q(lam),
                      ((), "dY", ("t", "t")): Q(lam) / 2}
            ok = (not rep.ok and set(wit) == {("dX", "X")}
                  and wit[("dX", "X")] == expect)
            out.append(_plain(
                "fodc", f"flat-discrepancy[lam={lam}]", ok,
                f"witnesses {wit}; expected {{('dX','X'): {expect}}}"))

    # guard rails of the classifier
    lam = Q(1)
    K, cov = fodc.cov_kheis_self(lam)
    try:
        fodc.classify(K, ("dX", "dY", "dt"), "right", 2, cov)
        out.append(_plain("fodc", "ansatz-degree-lower-bound", False,
                          "degree-2 ansatz was accepted"))
    except fodc.AnsatzTooSmall:
        out.append(_plain("fodc", "ansatz-degree-lower-bound", True))
    deep = fodc.FODCSpec(
        K, ("dX",),
        {("dX", g): {(("t",) * 4, "dX"): Q(1)} for g in K.generators},
        {g: {((), "d" + g): Q(1)} for g in K.generators if g == "X"},
        name="deep")
    try:
        fodc.classify(K, ("dX",), "right", 3, cov, known=[deep])
        out.append(_plain("fodc", "ansatz-vs-known-degree", False,
                          "known table exceeding the ansatz was accepted"))
    except fodc.AnsatzTooSmall:
        out.append(_plain("fodc", "ansatz-vs-known-degree", True))
    return out


# ---------------------------------------------------------------------------
# suite: sl2 -- the matched pair of Lie algebras and its group form
# ---------------------------------------------------------------------------

def suite_sl2() -> List[CheckResult]:
    out: List[CheckResult] = []
    M = liematched.matched_pair()
    bad = liematched.check_matched(M)
    out.append(_plain("sl2", "matched-conditions", bad is None, str(bad)))

    dbl = liematched.build_double(M)
    j = dbl.check_jacobi()
    out.append(_plain("sl2", "double-jacobi", j is None, str(j)))

    images = liematched.iso_to_sl2(dbl)
    expect = {"X": {"E": Q(1)}, "Y": {"H": Q(1, 2)}, "z": {"F": Q(-1)}}
    out.append(_plain("sl2", "iso-to-sl2", images == expect, str(images)))

    fX = liematched.f_map(NCPoly({("X",): Q(1)}))
    fY = liematched.f_map(NCPoly({("Y",): Q(1)}))
    ok = fX.terms == {("Y",): Q(2)} and not fY.terms
    out.append(_plain("sl2", "infinitesimal-translation-map", ok,
                      f"f(X)={fX.terms} f(Y)={fY.terms}"))

    left = liematched.left_lie_action_from_f()
    ok = left == {"X": {"Y": Q(2)}, "Y": {}}
    out.append(_plain("sl2", "left-action-from-translation", ok, str(left)))

    right = liematched.right_lie_action_adjoint()
    ok = right == {"X": {}, "Y": {"z": Q(1)}}
    out.append(_plain("sl2", "right-action-adjoint", ok, str(right)))

    samples = liematched.sample_points(120)
    good, count = liematched.group_actions_check(samples)
    out.append(_plain("sl2", "group-matrix-identity", good and count >= 100,
                      f"passed={good} checks={count}"))
    return out


# ---------------------------------------------------------------------------
# suite: schrodinger -- module-algebra actions and their duals
# ---------------------------------------------------------------------------

def suite_schrodinger(N: int = 8) -> List[CheckResult]:
    out: List[CheckResult] = []
    D1 = sch.ucm_on_ubplus(N)
    D2 = sch.uheis_on_ubplus(Q(2))
    for label, D in (("UCM-level", D1), ("Heisenberg-level", D2)):
        out.append(_from_report(
            "schrodinger", f"module-algebra[{label}]",
            sch.check_module_algebra(D, grade_bound=4)))
        out.append(_from_report(
            "schrodinger", f"comodule[{label}]", sch.check_comodule(D)))
        out.append(_from_report(
            "schrodinger", f"action-coaction-duality[{label}]",
            sch.check_action_coaction_duality(D)))
    out.append(_from_report("schrodinger", "quotient-restriction",
                            sch.check_quotient_restriction()))
    for lam in NONZERO_LAMBDAS:
        out.append(_from_report(
            "schrodinger", f"scaling-consistency[lam={lam}]",
            sch.check_scaling_consistency(Q(lam))))
    out.append(_from_report("schrodinger", "pairing-translation-duality",
                            sch.check_pairing_translation_duality(N)))
    return out


# ---------------------------------------------------------------------------
# suite: finite-group -- the set-factorisation double at finite scale
# ---------------------------------------------------------------------------

def suite_finite_group() -> List[CheckResult]:
    out: List[CheckResult] = []
    X, G, M = finitegroup.s3_factorisation()
    B1, B2 = finitegroup.finite_group_bicross(X, G, M)
    out.append(_from_report("finite-group", "hopf[functions-cross-group]",
                            finitegroup.check_finite_hopf(B1)))
    out.append(_from_report("finite-group", "hopf[group-cross-functions]",
                            finitegroup.check_finite_hopf(B2)))
    out.append(_from_report("finite-group", "pairing-duality",
                            finitegroup.check_pairing(B1, B2)))
    mat = finitegroup.pairing_matrix(B1, B2)
    entries = sum(len(r) for r in mat)
    out.append(_plain("finite-group", "pairing-entries", entries == 36,
                      f"{entries} entries"))
    Xt = finitegroup.s3_group()
    Bt1, Bt2 = finitegroup.finite_group_bicross(
        *finitegroup.trivial_factorisation(Xt))
    out.append(_from_report("finite-group", "hopf[trivial-factorisation]",
                            finitegroup.check_finite_hopf(Bt1)))
    out.append(_from_report("finite-group", "pairing[trivial-factorisation]",
                            finitegroup.check_pairing(Bt1, Bt2)))
    return out


# ---------------------------------------------------------------------------
# the full report
# ---------------------------------------------------------------------------

SUITES: Dict[str, Callable[[], List[CheckResult]]] = {
    "hopf": suite_hopf,
    "bicross": suite_bicross,
    "compat": suite_compat,
    "pairing": suite_pairing,
    "nondegenerate": suite_nondegenerate,
    "ideal": suite_ideal,
    "scaling": suite_scaling,
    "fodc": suite_fodc,
    "sl2": suite_sl2,
    "schrodinger": suite_schrodinger,
    "finite-group": suite_finite_group,
}


def run_suite(name: str) -> List[CheckResult]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {sorted(SUITES)}")
    return SUITES[name]()


def run_all() -> List[CheckResult]:
    out: List[CheckResult] = []
    for name in SUITES:
        out.extend(SUITES[name]())
    return out


def all_pass(results: Sequence[CheckResult]) -> bool:
    return all(r.status != "fail" for r in results)
