"""Text syntax for degree-two classes.

Over F_2 a component is a quadratic form written as a sum of monomials::

    x^2 + yz            x1*x2 + x3*x4        xy + y^2 + x

Variables are ``x1 .. xm`` (1-based) or, when m <= 3, the letters x, y, z.
Juxtaposed letters multiply (``yz``), ``*`` is optional, and a lone
variable stands for its square.  For odd p a component is a sum of wedges
and Bocksteins with optional integer coefficients::

    x&y + 2*beta(x)      x1∧x2 - x3∧x4        βy

Canonical printing orders terms by index pair and omits ``*`` between
single-letter variables, e.g. ``x^2 + yz``.
"""

from __future__ import annotations

import re

from .errors import FormSyntaxError, InputError
from .forms import AlternatingBockstein, ClassComponent, QuadraticFormF2, alt_pairs, quad_pairs

LETTERS = "xyz"

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+)
  | (?P<beta>beta|β)
  | (?P<var>x\d+|[xyz])
  | (?P<op>[-+*^&∧()])
""", re.VERBOSE)


def _tokens(text: str):
    pos = 0
    out = []
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if mt is None:
            raise FormSyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        kind = mt.lastgroup
        if kind != "ws":
            out.append((kind, mt.group(), pos))
        pos = mt.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, p: int, m: int):
        self.text, self.p, self.m = text, p, m
        self.toks = _tokens(text)
        self.i = 0

    def peek(self, value=None):
        kind, val, _ = self.toks[self.i]
        return val if value is None else val == value

    def kind(self):
        return self.toks[self.i][0]

    def pos(self):
        return self.toks[self.i][2]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, msg):
        raise FormSyntaxError(msg, self.text, self.pos())

    def expect(self, value):
        if not self.peek(value):
            self.fail(f"expected {value!r}")
        return self.take()

    def var(self) -> int:
        if self.kind() != "var":
            self.fail("expected a variable")
        _, name, pos = self.take()
        if name in LETTERS:
            if self.m > 3:
                raise FormSyntaxError(f"letter variable {name!r} needs m <= 3 (use x1..x{self.m})", self.text, pos)
            idx = LETTERS.index(name)
        else:
            idx = int(name[1:]) - 1
        if not 0 <= idx < self.m:
            raise FormSyntaxError(f"variable {name!r} out of range for m={self.m}", self.text, pos)
        return idx

    def terms(self):
        """Yield (sign * coefficient, term_start) for each signed term."""
        sign = 1
        if self.peek("-"):
            self.take()
            sign = -1
        elif self.peek("+"):
            self.take()
        while True:
            yield sign
            if self.peek("+"):
                self.take()
                sign = 1
            elif self.peek("-"):
                self.take()
                sign = -1
            elif self.kind() == "end":
                return
            else:
                self.fail("expected '+' or end of expression")

    def coefficient(self) -> int | None:
        if self.kind() == "num":
            _, val, _ = self.take()
            if self.peek("*"):
                self.take()
            return int(val)
        return None

    def parse_quadratic(self) -> QuadraticFormF2:
        counts = {}
        for sign in self.terms():
            start = self.pos()
            coeff = self.coefficient()
            factors = []
            while self.kind() == "var":
                v = self.var()
                power = 1
                if self.peek("^"):
                    self.take()
                    if self.kind() != "num":
                        self.fail("expected an exponent")
                    power = int(self.take()[1])
                factors += [v] * power
                if self.peek("*"):
                    self.take()
                    if self.kind() != "var":
                        self.fail("expected a variable after '*'")
            if not factors:
                if coeff is not None:  # a bare constant such as the zero form "0"
                    if coeff % 2:
                        raise FormSyntaxError("constant term in a quadratic form", self.text, start)
                    continue
                self.fail("expected a term")
            if len(factors) == 1:
                factors *= 2
            if len(factors) != 2:
                raise FormSyntaxError(f"term of degree {len(factors)}, expected 2", self.text, start)
            c = (1 if coeff is None else coeff) * sign
            key = (min(factors), max(factors))
            counts[key] = counts.get(key, 0) + c
        index = {ij: k for k, ij in enumerate(quad_pairs(self.m))}
        coeffs = [0] * len(index)
        for ij, c in counts.items():
            coeffs[index[ij]] = c % 2
        return QuadraticFormF2(self.m, tuple(coeffs))

    def parse_altbock(self) -> AlternatingBockstein:
        wedges, bocks = [], []
        for sign in self.terms():
            start = self.pos()
            coeff = self.coefficient()
            c = (1 if coeff is None else coeff) * sign
            if self.kind() == "beta":
                self.take()
                if self.peek("("):
                    self.take()
                    v = self.var()
                    self.expect(")")
                else:
                    v = self.var()
                bocks.append((v, c))
            elif self.kind() == "var":
                i = self.var()
                if not (self.peek("&") or self.peek("∧")):
                    self.fail("expected a wedge '&'")
                self.take()
                j = self.var()
                if i == j:
                    raise FormSyntaxError("x&x vanishes; write the term without it", self.text, start)
                wedges.append((i, j, c))
            elif coeff is not None and coeff % self.p == 0:
                continue
            else:
                self.fail("expected a wedge or a Bockstein term")
        return AlternatingBockstein.from_terms(self.p, self.m, wedges, bocks)


def parse_component(text: str, p: int, m: int) -> ClassComponent:
    parser = _Parser(text, p, m)
    if parser.kind() == "end":
        raise FormSyntaxError("empty expression", text, 0)
    return parser.parse_quadratic() if p == 2 else parser.parse_altbock()


def parse_form(text: str, m: int) -> QuadraticFormF2:
    return parse_component(text, 2, m)


def var_name(i: int, m: int) -> str:
    return LETTERS[i] if m <= 3 else f"x{i + 1}"


def format_component(q: ClassComponent) -> str:
    m = q.m
    parts = []
    if isinstance(q, QuadraticFormF2):
        for (i, j), c in zip(quad_pairs(m), q.coeffs):
            if not c:
                continue
            if i == j:
                parts.append(f"{var_name(i, m)}^2")
            elif m <= 3:
                parts.append(var_name(i, m) + var_name(j, m))
            else:
                parts.append(f"{var_name(i, m)}*{var_name(j, m)}")
    elif isinstance(q, AlternatingBockstein):
        for (i, j), c in zip(alt_pairs(m), q.alt):
            if c:
                parts.append(("" if c == 1 else f"{c}*") + f"{var_name(i, m)}&{var_name(j, m)}")
        for i, c in enumerate(q.bock):
            if c:
                parts.append(("" if c == 1 else f"{c}*") + f"beta({var_name(i, m)})")
    else:
        raise InputError(f"not a class component: {q!r}")
    return " + ".join(parts) if parts else "0"
