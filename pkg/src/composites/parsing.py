"""Text grammar shared by the CLI and the renderers.

Ring descriptors look like ``Z + X*Q[X]`` or ``Z[sqrt(-5)] + X*Q(sqrt(-5))[X]``;
elements are sums of terms with rational or parenthesised quadratic
coefficients, e.g. ``3/2*X^2 + 2*X + 1`` or ``(1+1*sqrt(-5))*X``.  Ideals
are written ``ideal(g1; g2; ...)`` and primes ``prime:M``,
``prime:T(<poly>)`` or ``prime:K(<gens>)``.  Whitespace is insignificant;
X is the only variable.  Rendered output re-parses to an equal value.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, Tuple

from . import lpoly
from .elements import CompositeElement
from .errors import ParseError
from .numbers import (
    Integers,
    LocalizedIntegers,
    QuadElement,
    QuadRing,
    Rationals,
)
from .rings import CompositePair, LDesc, QQ, builtin_pair

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z]+)|(?P<sym>[-+*/^()\[\]_;:,]))"
)


class _Tokens:
    def __init__(self, text: str) -> None:
        self.text = text
        self.items: List[Tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if m is None or m.end() == pos:
                stripped = text[pos:].lstrip()
                if not stripped:
                    break
                raise ParseError("unexpected character", pos, text)
            if m.group("int") is not None:
                self.items.append(("int", m.group("int"), m.start("int")))
            elif m.group("name") is not None:
                self.items.append(("name", m.group("name"), m.start("name")))
            else:
                self.items.append(("sym", m.group("sym"), m.start("sym")))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.items[self.i] if self.i < len(self.items) else (None, None, len(self.text))

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, kind: str, value=None):
        k, v, p = self.next()
        if k != kind or (value is not None and v != value):
            want = value if value is not None else kind
            raise ParseError(f"expected {want!r}", p, self.text)
        return v

    def accept(self, kind: str, value=None) -> bool:
        k, v, _ = self.peek()
        if k == kind and (value is None or v == value):
            self.i += 1
            return True
        return False

    def at_end(self) -> bool:
        return self.i >= len(self.items)

    def error(self, message: str) -> ParseError:
        _, _, p = self.peek()
        return ParseError(message, p, self.text)


# ---------------------------------------------------------------------------
# ring descriptors


def parse_ring(text: str) -> CompositePair:
    toks = _Tokens(text)
    k = _parse_k(toks)
    toks.expect("sym", "+")
    toks.expect("name", "X")
    toks.expect("sym", "*")
    l = _parse_l(toks)
    toks.expect("sym", "[")
    toks.expect("name", "X")
    toks.expect("sym", "]")
    if not toks.at_end():
        raise toks.error("trailing input after ring descriptor")
    return builtin_pair(k, l)


def _parse_int(toks: _Tokens) -> int:
    sign = -1 if toks.accept("sym", "-") else 1
    return sign * int(toks.expect("int"))


def _parse_k(toks: _Tokens):
    name = toks.expect("name")
    if name == "Z":
        if toks.accept("sym", "_"):
            toks.expect("sym", "(")
            p = _parse_int(toks)
            toks.expect("sym", ")")
            return LocalizedIntegers(p)
        if toks.accept("sym", "["):
            toks.expect("name", "sqrt")
            toks.expect("sym", "(")
            d = _parse_int(toks)
            toks.expect("sym", ")")
            toks.expect("sym", "]")
            return QuadRing(d)
        return Integers()
    if name == "Q":
        return Rationals()
    raise toks.error(f"unknown base ring {name!r}")


def _parse_l(toks: _Tokens) -> LDesc:
    toks.expect("name", "Q")
    k, v, _ = toks.peek()
    if k == "sym" and v == "(":
        toks.next()
        toks.expect("name", "sqrt")
        toks.expect("sym", "(")
        d = _parse_int(toks)
        toks.expect("sym", ")")
        toks.expect("sym", ")")
        return LDesc(d)
    return QQ


# ---------------------------------------------------------------------------
# polynomials and elements


def parse_poly(text: str, field: LDesc) -> tuple:
    toks = _Tokens(text)
    p = _parse_sum(toks, field)
    if not toks.at_end():
        raise toks.error("trailing input after expression")
    return p


def parse_element(text: str, pair: CompositePair) -> CompositeElement:
    return CompositeElement(pair, parse_poly(text, pair.l_field))


def _parse_sum(toks: _Tokens, field: LDesc) -> tuple:
    total = ()
    first = True
    while True:
        if toks.accept("sym", "-"):
            sign = -1
        elif toks.accept("sym", "+"):
            if first:
                raise toks.error("expression may not start with '+'")
            sign = 1
        elif first:
            sign = 1
        else:
            break
        term = _parse_term(toks, field)
        if sign < 0:
            term = lpoly.pneg(term)
        total = lpoly.padd(total, term)
        first = False
        k, v, _ = toks.peek()
        if not (k == "sym" and v in "+-"):
            break
    return total


def _parse_term(toks: _Tokens, field: LDesc) -> tuple:
    acc = _parse_factor(toks, field)
    while toks.accept("sym", "*"):
        acc = lpoly.pmul(acc, _parse_factor(toks, field))
    return acc


def _parse_factor(toks: _Tokens, field: LDesc) -> tuple:
    k, v, _ = toks.peek()
    if k == "int":
        base: tuple = (field.coerce(_parse_rational(toks)),)
    elif k == "name" and v == "X":
        toks.next()
        base = (field.zero(), field.one())
    elif k == "name" and v == "sqrt":
        toks.next()
        toks.expect("sym", "(")
        d = _parse_int(toks)
        toks.expect("sym", ")")
        if field.is_rational or d != field.d:
            raise toks.error(f"sqrt({d}) does not live in {field}")
        base = (QuadElement(Fraction(0), Fraction(1), d),)
    elif k == "sym" and v == "(":
        toks.next()
        base = _parse_sum(toks, field)
        toks.expect("sym", ")")
    else:
        raise toks.error("expected a coefficient, X, sqrt(d) or '('")
    if toks.accept("sym", "^"):
        exp = _parse_int(toks)
        if exp < 0:
            raise toks.error("negative exponents are not supported")
        out = (field.one(),)
        for _ in range(exp):
            out = lpoly.pmul(out, base)
        return out
    return base


def _parse_rational(toks: _Tokens) -> Fraction:
    num = int(toks.expect("int"))
    k, v, _ = toks.peek()
    if k == "sym" and v == "/":
        save = toks.i
        toks.next()
        k2, v2, _ = toks.peek()
        if k2 == "int":
            return Fraction(num, int(toks.expect("int")))
        toks.i = save
    return Fraction(num)


# ---------------------------------------------------------------------------
# ideals and primes


def parse_ideal(text: str, pair: CompositePair):
    from .ideals import FGIdeal

    toks = _Tokens(text)
    toks.expect("name", "ideal")
    toks.expect("sym", "(")
    gens = []
    while True:
        start = toks.i
        depth = 0
        while not toks.at_end():
            k, v, _ = toks.peek()
            if k == "sym" and v == "(":
                depth += 1
            elif k == "sym" and v == ")":
                if depth == 0:
                    break
                depth -= 1
            elif k == "sym" and v == ";" and depth == 0:
                break
            toks.next()
        seg = toks.items[start : toks.i]
        sub = _Tokens("")
        sub.text = toks.text
        sub.items = seg
        sub.i = 0
        gens.append(CompositeElement(pair, _parse_sum(sub, pair.l_field)))
        if not sub.at_end():
            raise sub.error("trailing input in ideal generator")
        if toks.accept("sym", ";"):
            continue
        toks.expect("sym", ")")
        break
    if not toks.at_end():
        raise toks.error("trailing input after ideal")
    return FGIdeal(pair, tuple(gens))


def parse_prime(text: str, pair: CompositePair):
    from .spectrum import AugmentationPrime, ContractionPrime

    m = re.match(r"\s*prime\s*:\s*(.*)$", text, re.DOTALL)
    if m is None:
        raise ParseError("expected 'prime:...'", 0, text)
    body = m.group(1).strip()
    if body == "M":
        return ContractionPrime(pair, (pair.l_field.zero(), pair.l_field.one()))
    tm = re.match(r"T\s*\((.*)\)\s*$", body, re.DOTALL)
    if tm is not None:
        poly = parse_poly(tm.group(1), pair.l_field)
        return ContractionPrime(pair, lpoly.monic(poly))
    km = re.match(r"K\s*\((.*)\)\s*$", body, re.DOTALL)
    if km is not None:
        gens = tuple(
            _parse_scalar(part, pair.l_field)
            for part in km.group(1).split(";")
        )
        return AugmentationPrime(pair, gens)
    raise ParseError("expected prime:M, prime:T(...) or prime:K(...)", 0, text)


def _parse_scalar(text: str, field: LDesc):
    poly = parse_poly(text, field)
    if lpoly.pdeg(poly) > 0:
        raise ParseError("expected a constant", 0, text)
    return poly[0] if poly else field.zero()


# ---------------------------------------------------------------------------
# rendering (canonical; output re-parses to an equal value)


def render_scalar(c) -> str:
    if isinstance(c, QuadElement):
        if not c.b:
            return _render_fraction(c.a)
        parts = []
        if c.a:
            parts.append(_render_fraction(c.a))
        bpart = f"{_render_fraction(abs(c.b))}*sqrt({c.d})"
        if c.a:
            parts.append("-" if c.b < 0 else "+")
            parts.append(bpart)
        else:
            parts.append(bpart if c.b > 0 else f"-{bpart}")
        return "(" + "".join(parts) + ")"
    return _render_fraction(Fraction(c))


def _render_fraction(f: Fraction) -> str:
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def render_poly(coeffs: tuple, field: LDesc) -> str:
    coeffs = lpoly.trim(coeffs)
    if not coeffs:
        return "0"
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        terms.append(_render_term(c, k))
    out = terms[0]
    for t in terms[1:]:
        if t.startswith("-"):
            out += " - " + t[1:]
        else:
            out += " + " + t
    return out


def _render_term(c, k: int) -> str:
    xpart = "" if k == 0 else ("X" if k == 1 else f"X^{k}")
    if isinstance(c, QuadElement) and c.b:
        s = render_scalar(c)
        return f"{s}*{xpart}" if xpart else s
    f = Fraction(c.a) if isinstance(c, QuadElement) else Fraction(c)
    if not xpart:
        return _render_fraction(f)
    if f == 1:
        return xpart
    if f == -1:
        return f"-{xpart}"
    return f"{_render_fraction(f)}*{xpart}"


def render_element(e: CompositeElement) -> str:
    return render_poly(e.coeffs, e.pair.l_field)


def render_ring(pair: CompositePair) -> str:
    return str(pair)


def render_ideal(ideal) -> str:
    return "ideal(" + "; ".join(render_element(g) for g in ideal.gens) + ")"
