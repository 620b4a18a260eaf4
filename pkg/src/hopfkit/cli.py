"""Command-line interface: exact computations and verification reports.

Every verification command prints one JSON line per check with the keys
``suite``, ``check``, ``status``, and ``witness``, followed by a summary
line, and exits 0 exactly when no check failed.
"""
from __future__ import annotations

import json
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

import click

from . import expr, family as fam, fodc, hopf, pairing as pr, verify
from .core import HopfkitError, NCPoly, UnknownGenerator

Q = Fraction


def _fraction(_ctx, _param, value):
    if value is None:
        return None
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as e:
        raise click.BadParameter(f"not a rational number: {value!r} ({e})")


_LAMBDA = click.option("--lam", "--lambda", "lam", default="1",
                       callback=_fraction, show_default=True,
                       help="rational parameter of the family")
_TRUNC = click.option("-N", "--truncation", "N", default=8, show_default=True,
                      help="truncation order for open generator families")


def _build(tag: str, lam: Fraction, N: int):
    try:
        return fam.build(tag, lam, N)
    except (KeyError, ValueError) as e:
        raise click.ClickException(str(e))


def _parse_in(src: str, H) -> NCPoly:
    try:
        return H.normalize(expr.parse(src, H))
    except (expr.ParseError, UnknownGenerator) as e:
        raise click.ClickException(f"cannot parse {src!r} in {H.name}: {e}")


@click.group()
def main():
    """Exact workbench for a family of bicrossproduct Hopf algebras."""


@main.command("normal-form")
@click.argument("tag")
@click.argument("expression")
@_LAMBDA
@_TRUNC
def normal_form(tag, expression, lam, N):
    """Rewrite EXPRESSION to its normal form in the algebra TAG."""
    H = _build(tag, lam, N)
    click.echo(expr.render(_parse_in(expression, H).terms))


@main.command()
@click.argument("tag")
@click.argument("expression")
@_LAMBDA
@_TRUNC
def coproduct(tag, expression, lam, N):
    """Print the coproduct of EXPRESSION in the algebra TAG."""
    H = _build(tag, lam, N)
    click.echo(expr.render_tensor(H.coproduct(_parse_in(expression, H)).terms))


@main.command()
@click.argument("tag")
@click.argument("expression")
@_LAMBDA
@_TRUNC
def antipode(tag, expression, lam, N):
    """Print the antipode of EXPRESSION in the algebra TAG."""
    H = _build(tag, lam, N)
    click.echo(expr.render(H.antipode(_parse_in(expression, H)).terms))


_PAIRS = {
    frozenset(("Ud0", "FD0")): lambda U, F, lam: pr.pairing_ud0_fd0(U, F),
    frozenset(("Ubplus", "FBplus")): lambda U, F, lam: pr.pairing_ubplus_fbplus(U, F),
    frozenset(("UCM", "HCM")): lambda U, F, lam: pr.pairing_ucm_hcm(U, F),
    frozenset(("UHeis", "KHeis")): lambda U, F, lam: pr.pairing_uheis_kheis(U, F, lam),
}
_ENVELOPING = ("Ud0", "Ubplus", "UCM", "UHeis")


@main.command()
@click.argument("tag1")
@click.argument("tag2")
@click.argument("expr1")
@click.argument("expr2")
@_LAMBDA
@_TRUNC
def pair(tag1, tag2, expr1, expr2, lam, N):
    """Evaluate the duality pairing of EXPR1 and EXPR2.

    TAG1 and TAG2 name a dually paired algebra pair in either order; each
    expression is parsed in whichever of the two algebras accepts it.
    """
    key = frozenset((tag1, tag2))
    if key not in _PAIRS:
        raise click.ClickException(
            f"no pairing between {tag1} and {tag2}; paired tags: "
            + ", ".join(sorted("/".join(sorted(k)) for k in _PAIRS)))
    utag = tag1 if tag1 in _ENVELOPING else tag2
    ftag = tag2 if utag == tag1 else tag1
    U, F = _build(utag, lam, N), _build(ftag, lam, N)
    P = _PAIRS[key](U, F, lam)

    def parse_either(src):
        for H in (U, F):
            try:
                return H, H.normalize(expr.parse(src, H))
            except (expr.ParseError, UnknownGenerator):
                continue
        raise click.ClickException(
            f"cannot parse {src!r} in {U.name} or {F.name}")

    H1, p1 = parse_either(expr1)
    H2, p2 = parse_either(expr2)
    if H1 is H2:
        raise click.ClickException(
            f"both expressions parse only in {H1.name}; need one from each side")
    u, f = (p1, p2) if H1 is U else (p2, p1)
    click.echo(str(P.pair(u, f)))


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

def _emit(results: Sequence[verify.CheckResult]) -> int:
    nfail = 0
    for r in results:
        click.echo(json.dumps({"suite": r.suite, "check": r.check_id,
                               "status": r.status, "witness": r.witness}))
        nfail += r.status == "fail"
    total = len(results)
    click.echo(f"# {total} checks, {nfail} failures")
    return 1 if nfail else 0


def _is_commutative(H) -> bool:
    for g in H.generators:
        for h in H.generators:
            if H.normalize({(g, h): Q(1)}) != H.normalize({(h, g): Q(1)}):
                return False
    return True


def _is_cocommutative(H) -> bool:
    for g in H.generators:
        d = H.gen_coproduct(g).terms
        if d != {(w2, w1): c for (w1, w2), c in d.items()}:
            return False
    return True


@main.group("verify")
def verify_group():
    """Run one named verification suite."""


@verify_group.command("hopf")
@click.option("--algebra", default=None, help="verify a single algebra tag")
@_LAMBDA
@_TRUNC
@click.option("--grade-bound", default=4, show_default=True)
def verify_hopf(algebra, lam, N, grade_bound):
    """Hopf axioms, for one algebra or for the whole family grid."""
    if algebra is None:
        sys.exit(_emit(verify.suite_hopf(N=N, grade_bound=grade_bound)))
    H = _build(algebra, lam, N)
    rep = hopf.check_hopf_axioms(H, grade_bound=grade_bound)
    res = [verify._from_report("hopf", f"axioms[{algebra},lam={lam}]", rep)]
    code = _emit(res)
    notes = [("commutative" if _is_commutative(H) else "not commutative"),
             ("cocommutative" if _is_cocommutative(H)
              else "not cocommutative")]
    click.echo("# note: " + " and ".join(notes))
    sys.exit(code)


def _plain_suite(name: str):
    @verify_group.command(name)
    def _cmd():
        sys.exit(_emit(verify.run_suite(name)))
    _cmd.__doc__ = f"Run the '{name}' verification suite."
    return _cmd


for _name in verify.SUITES:
    if _name != "hopf":
        _plain_suite(_name)


# ---------------------------------------------------------------------------
# differential calculi
# ---------------------------------------------------------------------------

_SCENARIOS = {
    "2d": verify.classify_2d,
    "3d-right": verify.classify_3d_extensions,
    "3d-bi": verify.classify_3d_bicovariant,
    "4d-bi": verify.classify_4d_bicovariant,
}


@main.command("classify-fodc")
@click.argument("scenario", type=click.Choice(sorted(_SCENARIOS)))
@_LAMBDA
@click.option("--degree", "-D", default=3, show_default=True,
              help="polynomial degree bound of the ansatz")
def classify_fodc(scenario, lam, degree):
    """Classify covariant first-order differential calculi."""
    try:
        sols = _SCENARIOS[scenario](lam, D=degree)
    except (fodc.AnsatzTooSmall, HopfkitError) as e:
        raise click.ClickException(str(e))
    click.echo(f"{len(sols)} solution(s)")
    for i, sp in enumerate(sols):
        click.echo(f"-- solution {i + 1}: {sp.name}")
        for (eta, g) in sorted(sp.rmult):
            entry = sp.rmult[(eta, g)]
            parts = []
            for (w, eta2), c in sorted(entry.items()):
                if not c:
                    continue
                word = "*".join(w) if w else ""
                term = f"{c}" if c != 1 or not (word or eta2) else ""
                parts.append("*".join(x for x in (term, word, eta2) if x))
            click.echo(f"   {eta}*{g} = " + (" + ".join(parts) or "0"))


@main.command()
@click.argument("what", type=click.Choice(["all"] + sorted(verify.SUITES)))
def report(what):
    """Run verification suites and print a structured report."""
    if what == "all":
        sys.exit(_emit(verify.run_all()))
    sys.exit(_emit(verify.run_suite(what)))


if __name__ == "__main__":
    main()
