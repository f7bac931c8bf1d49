"""Exact integer bivariate Laurent polynomials and the builtin A-polynomial registry.

Polynomials are stored sparsely as a map from exponent pairs (i, j) to nonzero
integer coefficients, where (i, j) means x^i * y^j and both exponents may be
negative.  All arithmetic is exact; evaluation is the only floating operation.
"""

from __future__ import annotations

import math
import re
from enum import Enum
from functools import lru_cache
from types import MappingProxyType
from typing import Dict, Iterable, Mapping, Tuple

Monomial = Tuple[int, int]


class PolyParseError(ValueError):
    """Syntax error in a polynomial expression, with the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class LaurentPoly2:
    """Immutable two-variable Laurent polynomial with integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        store: Dict[Monomial, int] = {}
        for (i, j), c in items:
            if not isinstance(c, int):
                raise TypeError(f"coefficient {c!r} is not an integer")
            if c == 0:
                continue
            key = (int(i), int(j))
            if key in store:
                raise ValueError(f"duplicate exponent pair {key}")
            store[key] = c
        object.__setattr__(self, "_terms", store)

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return MappingProxyType(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly2):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly2 is immutable")

    # ------------------------------------------------------------------ algebra

    def __add__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly2({k: c for k, c in out.items() if c != 0})

    def __sub__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        return self + (-other)

    def __neg__(self) -> "LaurentPoly2":
        return LaurentPoly2({k: -c for k, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly2({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        out: Dict[Monomial, int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPoly2({k: c for k, c in out.items() if c != 0})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly2":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers of a polynomial")
        result = LaurentPoly2({(0, 0): 1})
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shifted(self, di: int, dj: int) -> "LaurentPoly2":
        """Multiply by the monomial x^di * y^dj."""
        return LaurentPoly2({(i + di, j + dj): c for (i, j), c in self._terms.items()})

    # --------------------------------------------------------------- evaluation

    def __call__(self, x, y):
        """Evaluate at (x, y).  Zero base with a negative exponent raises."""
        if not self._terms:
            return 0.0
        if isinstance(x, complex) or isinstance(y, complex):
            return sum(c * x**i * y**j for (i, j), c in self._terms.items())
        return math.fsum(c * x**i * y**j for (i, j), c in self._terms.items())

    def partials(self) -> tuple["LaurentPoly2", "LaurentPoly2"]:
        """Formal (d/dx, d/dy); d/dx x^i = i x^(i-1) for every integer i."""
        px = {(i - 1, j): c * i for (i, j), c in self._terms.items() if i != 0}
        py = {(i, j - 1): c * j for (i, j), c in self._terms.items() if j != 0}
        return LaurentPoly2(px), LaurentPoly2(py)

    # ------------------------------------------------------------- structure

    def x_range(self) -> tuple[int, int]:
        ii = [i for i, _ in self._terms]
        return min(ii), max(ii)

    def y_range(self) -> tuple[int, int]:
        jj = [j for _, j in self._terms]
        return min(jj), max(jj)

    def cleared(self) -> tuple["LaurentPoly2", tuple[int, int]]:
        """Shift all exponents nonnegative; returns (ordinary polynomial, shift)."""
        if not self._terms:
            return self, (0, 0)
        i0, _ = self.x_range()
        j0, _ = self.y_range()
        return self.shifted(-i0, -j0), (-i0, -j0)

    def y_coefficients(self) -> Dict[int, Dict[int, int]]:
        """Group terms by y-degree: {j: {i: c}}."""
        out: Dict[int, Dict[int, int]] = {}
        for (i, j), c in self._terms.items():
            out.setdefault(j, {})[i] = c
        return out

    def is_even_in_x(self) -> bool:
        """True iff every monomial has an even power of x."""
        return all(i % 2 == 0 for i, _ in self._terms)

    def is_reciprocal(self) -> bool:
        """True iff p(1/x, 1/y) equals +- x^m y^n p(x, y) for some integers m, n."""
        if not self._terms:
            raise ValueError("reciprocity is undefined for the zero polynomial")
        rev = {(-i, -j): c for (i, j), c in self._terms.items()}
        pi = [i for i, _ in self._terms]
        pj = [j for _, j in self._terms]
        ri = [i for i, _ in rev]
        rj = [j for _, j in rev]
        m_lo, m_hi = min(pi) - min(ri), max(pi) - max(ri)
        n_lo, n_hi = min(pj) - min(rj), max(pj) - max(rj)
        if m_lo != m_hi or n_lo != n_hi:
            return False
        shifted = {(i + m_lo, j + n_lo): c for (i, j), c in rev.items()}
        if shifted == self._terms:
            return True
        return shifted == {k: -c for k, c in self._terms.items()}

    # ------------------------------------------------------------------ printing

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        ordered = sorted(self._terms.items(), key=lambda kv: (kv[0][1], kv[0][0]), reverse=True)
        pieces = []
        for idx, ((i, j), c) in enumerate(ordered):
            factors = []
            if abs(c) != 1 or (i == 0 and j == 0):
                factors.append(str(abs(c)))
            if i != 0:
                factors.append("x" if i == 1 else f"x^{i}")
            if j != 0:
                factors.append("y" if j == 1 else f"y^{j}")
            body = "*".join(factors)
            if idx == 0:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentPoly2({self})"


# ---------------------------------------------------------------------- parsing

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([xy])|([+\-*^()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos, n = 0, len(text)
    while pos < n:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            ch = text[pos]
            if ch == ".":
                raise PolyParseError("non-integer coefficient", pos)
            raise PolyParseError(f"unexpected character {ch!r}", pos)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("var", m.group(2), m.start(2)))
        else:
            tokens.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    return tokens


class _Parser:
    """Recursive-descent parser for the expression grammar.

    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := power (['*'] power)*
    power   := primary ['^' exponent]
    primary := integer | 'x' | 'y' | '(' expr ')'
    exponent:= ['-'|'+'] integer | '(' ['-'|'+'] integer ')'
    """

    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.idx = 0

    def peek(self):
        return self.tokens[self.idx] if self.idx < len(self.tokens) else (None, None, len(self.text))

    def advance(self):
        tok = self.peek()
        self.idx += 1
        return tok

    def expect_op(self, op: str):
        kind, val, pos = self.peek()
        if kind != "op" or val != op:
            raise PolyParseError(f"expected {op!r}", pos)
        self.advance()

    def parse(self) -> LaurentPoly2:
        poly = self.expr()
        kind, val, pos = self.peek()
        if kind is not None:
            raise PolyParseError(f"unexpected trailing {val!r}", pos)
        return poly

    def expr(self) -> LaurentPoly2:
        sign = 1
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.advance()
            sign = -1 if val == "-" else 1
        total = sign * self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.advance()
                nxt = self.term()
                total = total + nxt if val == "+" else total - nxt
            else:
                return total

    def term(self) -> LaurentPoly2:
        result = self.power()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.advance()
                result = result * self.power()
            elif kind in ("int", "var") or (kind == "op" and val == "("):
                result = result * self.power()   # implicit multiplication
            else:
                return result

    def power(self) -> LaurentPoly2:
        base, bare_var = self.primary()
        kind, val, pos = self.peek()
        if kind == "op" and val == "^":
            self.advance()
            exponent = self.exponent()
            if exponent < 0:
                if bare_var is None:
                    raise PolyParseError("negative exponent requires a bare x or y", pos)
                i, j = (exponent, 0) if bare_var == "x" else (0, exponent)
                return LaurentPoly2({(i, j): 1})
            return base**exponent
        return base

    def primary(self) -> tuple[LaurentPoly2, str | None]:
        kind, val, pos = self.advance()
        if kind == "int":
            return LaurentPoly2({(0, 0): int(val)}), None
        if kind == "var":
            mono = (1, 0) if val == "x" else (0, 1)
            return LaurentPoly2({mono: 1}), val
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner, None
        raise PolyParseError(f"expected a term, found {val!r}" if val else "unexpected end of input", pos)

    def exponent(self) -> int:
        kind, val, pos = self.peek()
        if kind == "op" and val == "(":
            self.advance()
            n = self._signed_int()
            self.expect_op(")")
            return n
        return self._signed_int()

    def _signed_int(self) -> int:
        sign = 1
        kind, val, pos = self.peek()
        if kind == "op" and val in "+-":
            self.advance()
            sign = -1 if val == "-" else 1
        kind, val, pos = self.peek()
        if kind != "int":
            raise PolyParseError("expected an integer exponent", pos)
        self.advance()
        return sign * int(val)


def parse_poly(text: str) -> LaurentPoly2:
    """Parse a polynomial expression into a LaurentPoly2.

    Terms are joined by + and -; a term is a product of an optional integer
    coefficient, powers of x and y (negative exponents allowed, with or
    without parentheses: x^-4 and x^(-4) both work), and parenthesized
    subexpressions.  The * between factors is optional.
    """
    return _Parser(text).parse()


# --------------------------------------------------------------------- registry

class KnotId(Enum):
    """Knots whose A-polynomials ship with the library."""

    FIG8 = "fig8"
    K52 = "5_2"


_REGISTRY_SOURCES = {
    KnotId.FIG8: "y + y^-1 - (x^4 + x^-4) + x^2 + x^-2 + 2",
    KnotId.K52: ("1 + y*(-1 + 2*x^2 + 2*x^4 - x^8 + x^10)"
                 " + y^2*(x^4 - x^6 + 2*x^10 + 2*x^12 - x^14) + y^3*x^14"),
}


@lru_cache(maxsize=None)
def builtin_apoly(knot: KnotId) -> LaurentPoly2:
    """The registry A-polynomial for the given knot, in its symmetric form."""
    return parse_poly(_REGISTRY_SOURCES[knot])
