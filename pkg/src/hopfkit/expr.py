"""Expression grammar and canonical renderer for algebra elements.

Grammar (whitespace-insensitive):
    expr    := term (('+' | '-') term)*
    term    := factor ('*' factor)*
    factor  := rational | generator ('^' integer)? | '(' expr ')' | '-' factor
    rational := integer ('/' integer)?

Generators are named tokens validated against the target presentation
(e.g. X, Y, t, z, theta, t2..tN, z2..zN, alpha, alphaInv, beta).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, List, Tuple

from .core import HopfkitError, Presentation, UnknownGenerator

Q = Fraction
Word = Tuple[str, ...]

_TOKEN = re.compile(r"\s*([A-Za-z][A-Za-z0-9]*|\d+|[*+^/()-])")


class ParseError(HopfkitError):
    pass


def tokenize(src: str) -> List[str]:
    out: List[str] = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m:
            if src[pos:].strip():
                raise ParseError("unexpected character %r at %d"
                                 % (src[pos], pos))
            break
        out.append(m.group(1))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens: List[str], generators: List[str]):
        self.toks = tokens
        self.i = 0
        self.generators = set(generators)

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def next(self):
        t = self.peek()
        self.i += 1
        return t

    def parse(self) -> Dict[Word, Fraction]:
        out = self.expr()
        if self.peek() is not None:
            raise ParseError("trailing input at token %r" % self.peek())
        return out

    def expr(self) -> Dict[Word, Fraction]:
        acc = self.term()
        while self.peek() in ("+", "-"):
            op = self.next()
            t = self.term()
            sgn = Q(1) if op == "+" else Q(-1)
            for w, c in t.items():
                acc[w] = acc.get(w, Q(0)) + sgn * c
                if not acc[w]:
                    del acc[w]
        return acc

    def term(self) -> Dict[Word, Fraction]:
        acc = self.factor()
        while self.peek() == "*":
            self.next()
            f = self.factor()
            out: Dict[Word, Fraction] = {}
            for w1, c1 in acc.items():
                for w2, c2 in f.items():
                    w = w1 + w2
                    out[w] = out.get(w, Q(0)) + c1 * c2
            acc = {w: c for w, c in out.items() if c}
        return acc

    def factor(self) -> Dict[Word, Fraction]:
        t = self.peek()
        if t is None:
            raise ParseError("unexpected end of input")
        if t == "-":
            self.next()
            return {w: -c for w, c in self.factor().items()}
        if t == "(":
            self.next()
            inner = self.expr()
            if self.next() != ")":
                raise ParseError("missing closing parenthesis")
            return self._maybe_power(inner)
        if t.isdigit():
            self.next()
            num = int(t)
            if self.peek() == "/":
                self.next()
                den = self.next()
                if den is None or not den.isdigit():
                    raise ParseError("malformed rational")
                return {(): Q(num, int(den))}
            return {(): Q(num)}
        # generator token
        self.next()
        if t not in self.generators:
            raise ParseError("unknown generator %r" % t)
        return self._maybe_power({(t,): Q(1)})

    def _maybe_power(self, base: Dict[Word, Fraction]) -> Dict[Word, Fraction]:
        if self.peek() != "^":
            return base
        self.next()
        e = self.next()
        if e is None or not e.isdigit():
            raise ParseError("exponent must be a nonnegative integer")
        n = int(e)
        acc: Dict[Word, Fraction] = {(): Q(1)}
        for _ in range(n):
            out: Dict[Word, Fraction] = {}
            for w1, c1 in acc.items():
                for w2, c2 in base.items():
                    w = w1 + w2
                    out[w] = out.get(w, Q(0)) + c1 * c2
            acc = out
        return acc


def parse(src: str, alg: Presentation) -> Dict[Word, Fraction]:
    """Parse into a word->coefficient dict over the algebra's generators."""
    p = _Parser(tokenize(src), list(alg.generators))
    return p.parse()


# -- canonical renderer ---------------------------------------------------------


def _word_str(w: Word) -> str:
    if not w:
        return "1"
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        parts.append(w[i] if j - i == 1 else "%s^%d" % (w[i], j - i))
        i = j
    return "*".join(parts)


def _coeff_str(c: Fraction) -> str:
    return str(c)


def render(terms: Dict[Word, Fraction]) -> str:
    """Deterministic text form: terms sorted by descending length then word;
    unit coefficients dropped; '1' for the empty word."""
    items = [(w, c) for w, c in sorted(terms.items(),
                                       key=lambda kv: (-len(kv[0]), kv[0]))
             if c]
    if not items:
        return "0"
    chunks = []
    for idx, (w, c) in enumerate(items):
        neg = c < 0
        mag = -c if neg else c
        if w and mag == 1:
            body = _word_str(w)
        elif w:
            body = "%s*%s" % (_coeff_str(mag), _word_str(w))
        else:
            body = _coeff_str(mag)
        if idx == 0:
            chunks.append(("-" if neg else "") + body)
        else:
            chunks.append(("- " if neg else "+ ") + body)
    return " ".join(chunks)


def render_tensor(terms, rank: int = 2) -> str:
    """Deterministic text form for tensors: 'a (x) b' legs."""
    items = sorted(terms.items(),
                   key=lambda kv: tuple((-len(leg), leg) for leg in kv[0]))
    if not items:
        return "0"
    chunks = []
    for idx, (legs, c) in enumerate(items):
        neg = c < 0
        mag = -c if neg else c
        body = " (x) ".join(_word_str(leg) for leg in legs)
        if mag != 1:
            body = "%s*[%s]" % (_coeff_str(mag), body)
        if idx == 0:
            chunks.append(("-" if neg else "") + body)
        else:
            chunks.append(("- " if neg else "+ ") + body)
    return " ".join(chunks)
