"""Text format for extension elements.

Canonical form writes terms in descending monomial order separated by
``+``, e.g. ``2*x1^2*x2 + 3*x2 + 1``.  Coefficients are base-ring element
labels: plain indices for integer rings, ``(a,b)`` tuples for products,
``[[a,b],[c,d]]`` for matrix rings, and residue labels like ``t+1`` for
polynomial quotients.  Labels containing ``+`` must be parenthesized,
so ``(t+1)*x1`` parses while bare ``t`` and ``2t`` need no wrapping.
"""

from __future__ import annotations

import re

from .errors import PolyParseError
from .skew import SkewPoly, SPBWSpec, deglex_key

_WS = re.compile(r"\s+")
_VAR = re.compile(r"x(\d+)")
_WORD = re.compile(r"\d*[A-Za-z][A-Za-z0-9^]*")
_INT = re.compile(r"\d+")


def _scan_group(text: str, pos: int, open_ch: str, close_ch: str) -> int:
    depth = 0
    for i in range(pos, len(text)):
        if text[i] == open_ch:
            depth += 1
        elif text[i] == close_ch:
            depth -= 1
            if depth == 0:
                return i + 1
    raise PolyParseError(pos, f"matching {close_ch!r}", "end of input")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _WS.match(text, pos)
        if m:
            pos = m.end()
            continue
        ch = text[pos]
        if ch == "+":
            tokens.append(("PLUS", "+", pos))
            pos += 1
        elif ch == "*":
            tokens.append(("STAR", "*", pos))
            pos += 1
        elif ch == "^":
            tokens.append(("CARET", "^", pos))
            pos += 1
        elif ch == "(":
            end = _scan_group(text, pos, "(", ")")
            tokens.append(("GROUP", text[pos:end], pos))
            pos = end
        elif ch == "[":
            end = _scan_group(text, pos, "[", "]")
            tokens.append(("GROUP", text[pos:end], pos))
            pos = end
        else:
            m = _VAR.match(text, pos)
            if m:
                # x followed by digits is a variable unless a letter continues
                # the token, which makes it a label word instead.
                if m.end() < len(text) and text[m.end()].isalpha():
                    word = _WORD.match(text, pos)
                    tokens.append(("WORD", word.group(), pos))
                    pos = word.end()
                else:
                    tokens.append(("VAR", m.group(1), pos))
                    pos = m.end()
                continue
            m = _WORD.match(text, pos)
            if m and not m.group().isdigit():
                tokens.append(("WORD", m.group(), pos))
                pos = m.end()
                continue
            m = _INT.match(text, pos)
            if m:
                tokens.append(("INT", m.group(), pos))
                pos = m.end()
                continue
            raise PolyParseError(pos, "a term", text[pos])
    tokens.append(("EOF", "", len(text)))
    return tokens


def _resolve_coeff(spec: SPBWSpec, kind: str, value: str, pos: int) -> int:
    ring = spec.base
    if kind == "INT":
        idx = int(value)
        if idx >= ring.order:
            raise PolyParseError(pos, f"an element index below {ring.order}", value)
        return idx
    if kind == "GROUP" and value.startswith("(") and "," not in _strip_nested(value):
        value = value[1:-1]
    try:
        return ring.element_by_label(value)
    except ValueError:
        raise PolyParseError(pos, f"an element label of {ring.label}", value) from None


def _strip_nested(group: str) -> str:
    # Commas inside nested groups do not make the outer group a tuple label.
    depth = 0
    out = []
    for ch in group[1:-1]:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif depth == 0:
            out.append(ch)
    return "".join(out)


def parse_poly(spec: SPBWSpec, text: str) -> SkewPoly:
    """Parse canonical polynomial text into normal form."""
    tokens = _tokenize(text)
    idx = 0

    def peek():
        return tokens[idx]

    def advance():
        nonlocal idx
        tok = tokens[idx]
        idx += 1
        return tok

    def parse_varpow(alpha: list[int]) -> None:
        kind, value, pos = advance()
        var = int(value)
        if not (1 <= var <= spec.n):
            raise PolyParseError(pos, f"a variable index between 1 and {spec.n}", f"x{value}")
        exp = 1
        if peek()[0] == "CARET":
            advance()
            kind, value, pos = advance()
            if kind != "INT":
                raise PolyParseError(pos, "an integer exponent", value or "end of input")
            exp = int(value)
        alpha[var - 1] += exp

    def parse_term() -> tuple[tuple[int, ...], int]:
        kind, value, pos = peek()
        coeff = spec.base.one
        saw_coeff = False
        if kind in ("INT", "WORD", "GROUP"):
            advance()
            coeff = _resolve_coeff(spec, kind, value, pos)
            saw_coeff = True
        alpha = [0] * spec.n
        if peek()[0] == "VAR" and not saw_coeff:
            parse_varpow(alpha)
        elif saw_coeff and peek()[0] == "STAR":
            advance()
            if peek()[0] != "VAR":
                raise PolyParseError(peek()[2], "a variable like x1", peek()[1] or "end of input")
            parse_varpow(alpha)
        while peek()[0] == "STAR":
            advance()
            if peek()[0] != "VAR":
                raise PolyParseError(peek()[2], "a variable like x1", peek()[1] or "end of input")
            parse_varpow(alpha)
        if not saw_coeff and not any(alpha):
            raise PolyParseError(pos, "a coefficient or variable", value or "end of input")
        return tuple(alpha), coeff

    terms: dict[tuple[int, ...], int] = {}
    add = spec.base.add
    alpha, coeff = parse_term()
    terms[alpha] = add(terms.get(alpha, 0), coeff)
    while peek()[0] == "PLUS":
        advance()
        alpha, coeff = parse_term()
        terms[alpha] = add(terms.get(alpha, 0), coeff)
    kind, value, pos = peek()
    if kind != "EOF":
        raise PolyParseError(pos, "'+' or end of input", value)
    return SkewPoly(spec, {a: c for a, c in terms.items() if c != 0})


def format_exponent(alpha: tuple[int, ...]) -> str:
    parts = []
    for i, e in enumerate(alpha):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts)


def format_poly(f: SkewPoly) -> str:
    """Canonical text: descending monomial order, labels as coefficients."""
    if f.is_zero:
        return "0"
    ring = f.spec.base
    parts = []
    for alpha in sorted(f._terms, key=deglex_key, reverse=True):
        c = f._terms[alpha]
        label = ring.label_of(c)
        if any(ch in label for ch in "+* ") and not label.startswith(("(", "[")):
            label = f"({label})"
        mono = format_exponent(alpha)
        if not mono:
            parts.append(label)
        elif c == ring.one:
            parts.append(mono)
        else:
            parts.append(f"{label}*{mono}")
    return " + ".join(parts)
