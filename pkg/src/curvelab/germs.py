"""Sparse two-variable polynomials over exact rationals, used as curve germs.

A germ is represented by its terms only: a dict mapping exponent pairs
(i, j) for x^i y^j to nonzero Fraction coefficients.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import InputError

_TERM_RE = re.compile(
    r"""^
    (?:(?P<coeff>\d+(?:/\d+)?)(?P<star1>\*)?)?
    (?:x(?:\^(?P<xe>\d+))?)?
    (?P<star2>\*)?
    (?:y(?:\^(?P<ye>\d+))?)?
    $""",
    re.VERBOSE,
)


class GermPoly:
    """Polynomial f(x, y) with rational coefficients, sparse term table."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        table = {}
        if terms:
            for (i, j), c in dict(terms).items():
                c = Fraction(c)
                if c != 0:
                    table[(int(i), int(j))] = c
        self.terms = table

    @classmethod
    def zero(cls) -> "GermPoly":
        return cls()

    @classmethod
    def monomial(cls, i: int, j: int, c=1) -> "GermPoly":
        return cls({(i, j): Fraction(c)})

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self) -> Fraction:
        return self.terms.get((0, 0), Fraction(0))

    def multiplicity(self) -> int:
        """Lowest total degree of a term; the multiplicity m(f)."""
        if not self.terms:
            raise InputError("zero polynomial has no multiplicity")
        return min(i + j for (i, j) in self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(i + j for (i, j) in self.terms)

    def __eq__(self, other):
        return isinstance(other, GermPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "GermPoly") -> "GermPoly":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return GermPoly(out)

    def __sub__(self, other: "GermPoly") -> "GermPoly":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, Fraction(0)) - c
        return GermPoly(out)

    def __mul__(self, other: "GermPoly") -> "GermPoly":
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, Fraction(0)) + c1 * c2
        return GermPoly(out)

    def scale(self, c) -> "GermPoly":
        c = Fraction(c)
        return GermPoly({k: c * v for k, v in self.terms.items()})

    def mul_monomial(self, a: int, b: int) -> "GermPoly":
        return GermPoly({(i + a, j + b): c for (i, j), c in self.terms.items()})

    def partial_x(self) -> "GermPoly":
        return GermPoly(
            {(i - 1, j): c * i for (i, j), c in self.terms.items() if i > 0}
        )

    def partial_y(self) -> "GermPoly":
        return GermPoly(
            {(i, j - 1): c * j for (i, j), c in self.terms.items() if j > 0}
        )

    def truncate(self, order: int) -> "GermPoly":
        """Drop all terms of total degree >= order."""
        return GermPoly(
            {(i, j): c for (i, j), c in self.terms.items() if i + j < order}
        )

    def linear_substitute(self, a, b, c, d) -> "GermPoly":
        """Apply x -> a*x + b*y, y -> c*x + d*y.

        The substitution must be invertible to preserve germ invariants,
        but invertibility is the caller's business.
        """
        u = GermPoly({(1, 0): Fraction(a), (0, 1): Fraction(b)})
        v = GermPoly({(1, 0): Fraction(c), (0, 1): Fraction(d)})
        # cache powers up to the degrees that actually occur
        max_i = max((i for (i, _) in self.terms), default=0)
        max_j = max((j for (_, j) in self.terms), default=0)
        upow = [GermPoly({(0, 0): Fraction(1)})]
        for _ in range(max_i):
            upow.append(upow[-1] * u)
        vpow = [GermPoly({(0, 0): Fraction(1)})]
        for _ in range(max_j):
            vpow.append(vpow[-1] * v)
        out = GermPoly.zero()
        for (i, j), coef in self.terms.items():
            out = out + (upow[i] * vpow[j]).scale(coef)
        return out

    def to_string(self) -> str:
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda k: (k[0] + k[1], k[1]))
        parts = []
        for i, j in keys:
            c = self.terms[(i, j)]
            mono = []
            if i:
                mono.append("x" if i == 1 else f"x^{i}")
            if j:
                mono.append("y" if j == 1 else f"y^{j}")
            body = "*".join(mono)
            mag = abs(c)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if not parts:
                parts.append(text if c > 0 else f"-{text}")
            else:
                parts.append(f"+ {text}" if c > 0 else f"- {text}")
        return " ".join(parts)

    def __repr__(self):
        return f"GermPoly({self.to_string()})"


def _parse_term(text: str) -> tuple[Fraction, int, int]:
    t = text.replace(" ", "")
    m = _TERM_RE.match(t)
    if not m or not t:
        raise InputError(f"cannot parse term {text!r}")
    coeff, xe, ye = m.group("coeff"), m.group("xe"), m.group("ye")
    has_x = "x" in t
    has_y = "y" in t
    if coeff is None and not has_x and not has_y:
        raise InputError(f"cannot parse term {text!r}")
    if m.group("star1") and not (has_x or has_y):
        raise InputError(f"dangling '*' in term {text!r}")
    if m.group("star2") and not (has_x and has_y):
        raise InputError(f"misplaced '*' in term {text!r}")
    c = Fraction(coeff) if coeff is not None else Fraction(1)
    i = int(xe) if xe is not None else (1 if has_x else 0)
    j = int(ye) if ye is not None else (1 if has_y else 0)
    return c, i, j


def parse_germ(text: str) -> GermPoly:
    """Parse an expression like "y^2 - x^3" or "1/2*x*y + x^4".

    Terms are joined by + or -; each term is [coeff][*]x[^i][*][y[^j]] with
    an integer or p/q rational coefficient. The constant term must vanish
    (germs live in the maximal ideal).
    """
    s = text.strip()
    if not s:
        raise InputError("empty germ expression")
    pieces = re.split(r"([+-])", s)
    signed = []
    if pieces[0].strip():
        signed.append((1, pieces[0]))
    i = 1
    while i < len(pieces):
        sign = 1 if pieces[i] == "+" else -1
        if i + 1 >= len(pieces) or not pieces[i + 1].strip():
            raise InputError(f"dangling sign in {text!r}")
        signed.append((sign, pieces[i + 1]))
        i += 2
    if not signed:
        raise InputError(f"cannot parse {text!r}")
    terms = {}
    for sign, chunk in signed:
        c, xi, yj = _parse_term(chunk.strip())
        key = (xi, yj)
        terms[key] = terms.get(key, Fraction(0)) + sign * c
    f = GermPoly(terms)
    if f.constant_term() != 0:
        raise InputError("constant term nonzero: a germ must vanish at the origin")
    return f
