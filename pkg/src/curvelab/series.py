"""Exact truncated multivariate series with polynomial coefficients.

The series variables are formal markers x_alpha, one per singularity
label, graded by a positive integer weight per label and truncated at a
total-weight cap.  Coefficients are polynomials in the four Chern
variables (x, y, z, t) with rational coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .errors import InputError

CHERN_VARS = ("x", "y", "z", "t")


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"cannot parse rational {text!r}") from exc


class ChernPolynomial:
    """Polynomial in (x, y, z, t) = (L^2, L.K, c1^2, c2), exact rationals."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        table = {}
        if terms:
            for key, c in dict(terms).items():
                c = Fraction(c)
                if c != 0:
                    table[tuple(int(e) for e in key)] = c
        self.terms = table

    @classmethod
    def zero(cls) -> "ChernPolynomial":
        return cls()

    @classmethod
    def constant(cls, c) -> "ChernPolynomial":
        return cls({(0, 0, 0, 0): Fraction(c)})

    @classmethod
    def linear(cls, cx=0, cy=0, cz=0, ct=0) -> "ChernPolynomial":
        return cls({
            (1, 0, 0, 0): Fraction(cx),
            (0, 1, 0, 0): Fraction(cy),
            (0, 0, 1, 0): Fraction(cz),
            (0, 0, 0, 1): Fraction(ct),
        })

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, key) -> Fraction:
        return self.terms.get(tuple(key), Fraction(0))

    def constant_part(self) -> Fraction:
        return self.terms.get((0, 0, 0, 0), Fraction(0))

    def total_degree(self) -> int:
        return max((sum(k) for k in self.terms), default=0)

    def is_linear(self) -> bool:
        """Homogeneous of degree <= 1 with no constant term."""
        return all(sum(k) == 1 for k in self.terms)

    def __eq__(self, other):
        return isinstance(other, ChernPolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "ChernPolynomial") -> "ChernPolynomial":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return ChernPolynomial(out)

    def __sub__(self, other: "ChernPolynomial") -> "ChernPolynomial":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, Fraction(0)) - c
        return ChernPolynomial(out)

    def __mul__(self, other: "ChernPolynomial") -> "ChernPolynomial":
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                out[k] = out.get(k, Fraction(0)) + c1 * c2
        return ChernPolynomial(out)

    def scale(self, c) -> "ChernPolynomial":
        c = Fraction(c)
        return ChernPolynomial({k: c * v for k, v in self.terms.items()})

    def evaluate(self, point) -> Fraction:
        vals = [Fraction(v) for v in point]
        if len(vals) != 4:
            raise InputError("a Chern vector has exactly four entries")
        total = Fraction(0)
        for key, c in self.terms.items():
            term = c
            for v, e in zip(vals, key):
                term *= v ** e
            total += term
        return total

    def to_json_obj(self) -> list:
        return [
            [list(k), format_rational(c)]
            for k, c in sorted(self.terms.items())
        ]

    @classmethod
    def from_json_obj(cls, obj) -> "ChernPolynomial":
        try:
            return cls({tuple(k): parse_rational(c) for k, c in obj})
        except (TypeError, ValueError) as exc:
            raise InputError(f"malformed polynomial data: {obj!r}") from exc

    def to_string(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms, key=lambda k: (sum(k), tuple(-e for e in k))):
            c = self.terms[key]
            factors = []
            for name, e in zip(CHERN_VARS, key):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            mag = abs(c)
            if not body:
                text = format_rational(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{format_rational(mag)}*{body}"
            if not parts:
                parts.append(text if c > 0 else f"-{text}")
            else:
                parts.append(f"+ {text}" if c > 0 else f"- {text}")
        return " ".join(parts)

    def __repr__(self):
        return f"ChernPolynomial({self.to_string()})"


def aut_count(key) -> int:
    """Permutation symmetry order of a label multiset: product of mult!."""
    counts = {}
    for p in key:
        counts[p] = counts.get(p, 0) + 1
    out = 1
    for c in counts.values():
        out *= factorial(c)
    return out


class TruncatedSeries:
    """Series in marker variables keyed by sorted label multisets.

    weights: label -> positive integer weight; the empty multiset is the
    constant term; keys of total weight beyond `cap` are dropped.
    """

    __slots__ = ("weights", "cap", "coeffs")

    def __init__(self, weights: dict, cap: int = 10, coeffs=None):
        if not isinstance(cap, int) or cap < 0:
            raise InputError("truncation cap must be a nonnegative integer")
        for label, w in dict(weights).items():
            if not isinstance(w, int) or w < 1:
                raise InputError(f"weight of {label!r} must be a positive integer")
        self.weights = dict(weights)
        self.cap = cap
        table = {}
        if coeffs:
            for key, poly in dict(coeffs).items():
                key = tuple(sorted(key))
                if not isinstance(poly, ChernPolynomial):
                    poly = ChernPolynomial(poly)
                if poly.is_zero():
                    continue
                if self.key_weight(key) <= cap:
                    table[key] = poly
        self.coeffs = table

    def key_weight(self, key) -> int:
        total = 0
        for label in key:
            if label not in self.weights:
                raise InputError(f"label {label!r} has no assigned weight")
            total += self.weights[label]
        return total

    @classmethod
    def one(cls, weights, cap: int = 10) -> "TruncatedSeries":
        return cls(weights, cap, {(): ChernPolynomial.constant(1)})

    @classmethod
    def zero(cls, weights, cap: int = 10) -> "TruncatedSeries":
        return cls(weights, cap)

    def coefficient(self, key) -> ChernPolynomial:
        return self.coeffs.get(tuple(sorted(key)), ChernPolynomial.zero())

    def constant_coefficient(self) -> ChernPolynomial:
        return self.coeffs.get((), ChernPolynomial.zero())

    def _check_compatible(self, other: "TruncatedSeries"):
        if self.weights != other.weights or self.cap != other.cap:
            raise InputError("series have mismatched weights or truncation caps")

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedSeries)
            and self.weights == other.weights
            and self.cap == other.cap
            and self.coeffs == other.coeffs
        )

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        out = dict(self.coeffs)
        for k, p in other.coeffs.items():
            out[k] = out.get(k, ChernPolynomial.zero()) + p
        return TruncatedSeries(self.weights, self.cap, out)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        out = dict(self.coeffs)
        for k, p in other.coeffs.items():
            out[k] = out.get(k, ChernPolynomial.zero()) - p
        return TruncatedSeries(self.weights, self.cap, out)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        out = {}
        for k1, p1 in self.coeffs.items():
            w1 = self.key_weight(k1)
            for k2, p2 in other.coeffs.items():
                if w1 + other.key_weight(k2) > self.cap:
                    continue
                key = tuple(sorted(k1 + k2))
                prod = p1 * p2
                out[key] = out.get(key, ChernPolynomial.zero()) + prod
        return TruncatedSeries(self.weights, self.cap, out)

    def scale(self, c) -> "TruncatedSeries":
        return TruncatedSeries(
            self.weights, self.cap,
            {k: p.scale(c) for k, p in self.coeffs.items()},
        )

    def min_positive_weight(self) -> int:
        weights = [self.key_weight(k) for k in self.coeffs if k != ()]
        return min(weights) if weights else self.cap + 1

    def to_json_obj(self) -> dict:
        return {
            "cap": self.cap,
            "weights": dict(sorted(self.weights.items())),
            "coeffs": [
                [list(k), p.to_json_obj()]
                for k, p in sorted(self.coeffs.items())
            ],
        }

    @classmethod
    def from_json_obj(cls, obj) -> "TruncatedSeries":
        try:
            coeffs = {
                tuple(k): ChernPolynomial.from_json_obj(p)
                for k, p in obj["coeffs"]
            }
            return cls(obj["weights"], obj["cap"], coeffs)
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError("malformed series data") from exc


def exp_series(s: TruncatedSeries) -> TruncatedSeries:
    """exp of a series with zero constant term."""
    if not s.constant_coefficient().is_zero():
        raise InputError("exp needs a series with zero constant term")
    result = TruncatedSeries.one(s.weights, s.cap)
    power = TruncatedSeries.one(s.weights, s.cap)
    w = s.min_positive_weight()
    if w > s.cap:
        return result
    m = 1
    while m * w <= s.cap:
        power = power * s
        result = result + power.scale(Fraction(1, factorial(m)))
        m += 1
    return result


def log_series(t: TruncatedSeries) -> TruncatedSeries:
    """log of a series with constant term 1."""
    if t.constant_coefficient() != ChernPolynomial.constant(1):
        raise InputError("log needs a series with constant term 1")
    u = t - TruncatedSeries.one(t.weights, t.cap)
    result = TruncatedSeries.zero(t.weights, t.cap)
    power = TruncatedSeries.one(t.weights, t.cap)
    w = u.min_positive_weight()
    if w > t.cap:
        return result
    m = 1
    while m * w <= t.cap:
        power = power * u
        sign = Fraction(1, m) if m % 2 == 1 else Fraction(-1, m)
        result = result + power.scale(sign)
        m += 1
    return result


def assemble_series(a_table: dict, weights: dict, cap: int = 10) -> TruncatedSeries:
    """Build the generating series exp(sum a_key/#Aut(key) * x_key).

    Table entries are the #Aut-scaled logarithmic coefficients attached
    to each label multiset; each must be a linear Chern polynomial.
    """
    coeffs = {}
    for key, poly in a_table.items():
        key = tuple(sorted(key))
        if not isinstance(poly, ChernPolynomial):
            poly = ChernPolynomial(poly)
        if not poly.is_linear():
            raise InputError(
                f"table entry for {','.join(key)} must be linear in the Chern variables"
            )
        coeffs[key] = poly.scale(Fraction(1, aut_count(key)))
    log_part = TruncatedSeries(weights, cap, coeffs)
    return exp_series(log_part)


def extract_universal(series: TruncatedSeries, parts) -> ChernPolynomial:
    """Coefficient of the given label multiset; error outside the cap."""
    key = tuple(sorted(parts))
    if series.key_weight(key) > series.cap:
        raise InputError(
            f"multiset {','.join(key)} lies outside the truncation cap {series.cap}"
        )
    return series.coefficient(key)
