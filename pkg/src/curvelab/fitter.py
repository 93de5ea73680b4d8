"""Exact determination of universal node-count polynomials.

Node counts on the plane and on the smooth quadric, taken together,
pin down one linear polynomial in the four Chern numbers per order.
The per-order coefficients are read off the logarithm of the count
series; exponentiating the fitted line bundle of coefficients gives
closed-form predictions for either surface.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial

from .catalog import lookup
from .errors import CeilingError, InconsistencyError, InputError
from .series import (
    ChernPolynomial,
    TruncatedSeries,
    assemble_series,
    exp_series,
    extract_universal,
    log_series,
)
from .severi import SeveriEngine, plane_node_cap, quadric_node_cap

NODE_LABEL = "A1"
MAX_ORDER = 8

DEFAULT_PLANE_DEGREES = tuple(range(6, 13))
DEFAULT_QUADRIC_BIDEGREES = tuple(
    (a, b) for a in range(3, 6) for b in range(a, 6)
)


def chern_p2(d: int) -> tuple:
    """Chern vector (L^2, L.K, c1^2, c2) of (P^2, O(d))."""
    return (d * d, -3 * d, 9, 3)


def chern_quadric(a: int, b: int) -> tuple:
    """Chern vector of (P^1 x P^1, O(a,b))."""
    return (2 * a * b, -2 * a - 2 * b, 8, 4)


@dataclass(frozen=True)
class FitProblem:
    r_max: int
    plane_degrees: tuple
    quadric_bidegrees: tuple
    data: dict


@dataclass
class FitResult:
    r_max: int
    a: dict
    T: dict
    residual_consistent: bool
    problem: FitProblem

    def to_a_table(self) -> dict:
        """Log-coefficients keyed by node multisets, symmetry factors undone."""
        return {
            (NODE_LABEL,) * r: poly.scale(factorial(r))
            for r, poly in self.a.items()
        }

    def to_json_obj(self) -> dict:
        return {
            "r_max": self.r_max,
            "residual_consistent": self.residual_consistent,
            "a": {str(r): p.to_json_obj() for r, p in sorted(self.a.items())},
            "T": {str(r): p.to_json_obj() for r, p in sorted(self.T.items())},
        }


def _log_coefficients(counts) -> list:
    """Order-by-order log of a count sequence starting at 1."""
    cap = len(counts) - 1
    weights = {NODE_LABEL: 1}
    series = TruncatedSeries(
        weights,
        cap,
        {
            (NODE_LABEL,) * r: ChernPolynomial.constant(n)
            for r, n in enumerate(counts)
        },
    )
    logarithm = log_series(series)
    return [
        logarithm.coefficient((NODE_LABEL,) * r).constant_part()
        for r in range(cap + 1)
    ]


def _solve_linear4(equations) -> tuple:
    """Solve a (possibly overdetermined) 4-unknown rational system.

    Returns the solution of a full-rank subsystem; callers must verify
    the remaining equations themselves.
    """
    aug = [
        [Fraction(v) for v in vec] + [Fraction(rhs)] for vec, rhs in equations
    ]
    pivot_rows = []
    used = set()
    for col in range(4):
        pivot = None
        for i, row in enumerate(aug):
            if i not in used and row[col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        used.add(pivot)
        pivot_rows.append((col, aug[pivot]))
        inv = 1 / aug[pivot][col]
        norm = [v * inv for v in aug[pivot]]
        aug[pivot] = norm
        for i, row in enumerate(aug):
            if i not in used and row[col] != 0:
                factor = row[col]
                aug[i] = [v - factor * w for v, w in zip(row, norm)]
    if len(pivot_rows) < 4:
        raise InputError(
            "fit data spans only "
            f"{len(pivot_rows)} of the 4 Chern directions; add plane degrees "
            "and quadric bidegrees"
        )
    solution = [Fraction(0)] * 4
    for col, _ in reversed(pivot_rows):
        row = next(r for c, r in pivot_rows if c == col)
        value = row[4] - sum(row[j] * solution[j] for j in range(4) if j != col)
        solution[col] = value / row[col]
    return tuple(solution)


def fit_nodes(
    r_max: int,
    plane_degrees=None,
    quadric_bidegrees=None,
    engine: SeveriEngine = None,
) -> FitResult:
    if not isinstance(r_max, int) or r_max < 0:
        raise InputError("r_max must be a nonnegative integer")
    if r_max > MAX_ORDER:
        raise CeilingError(f"r_max {r_max} exceeds the order ceiling {MAX_ORDER}")

    if plane_degrees is None:
        plane_degrees = DEFAULT_PLANE_DEGREES
    if quadric_bidegrees is None:
        quadric_bidegrees = DEFAULT_QUADRIC_BIDEGREES
    plane_degrees = tuple(sorted(set(plane_degrees)))
    quadric_bidegrees = tuple(sorted(set(tuple(p) for p in quadric_bidegrees)))
    for d in plane_degrees:
        if not isinstance(d, int) or d < 1:
            raise InputError(f"bad plane degree {d!r}")
    for pair in quadric_bidegrees:
        if len(pair) != 2 or not all(isinstance(v, int) and v >= 1 for v in pair):
            raise InputError(f"bad quadric bidegree {pair!r}")

    engine = engine if engine is not None else SeveriEngine()

    # one row per surface polarization: its Chern vector, the log of its
    # count series, and the largest order the row may vote on
    rows = []
    data = {}
    for d in plane_degrees:
        top = min(r_max, plane_node_cap(d))
        counts = [engine.severi_p2(d, r) for r in range(top + 1)]
        for r, n in enumerate(counts):
            if n <= 0:
                raise InconsistencyError(f"nonpositive count {n} at P2 d={d} r={r}")
            data[("P2", d, r)] = n
        rows.append((chern_p2(d), _log_coefficients(counts), d - 2))
    for a, b in quadric_bidegrees:
        top = min(r_max, quadric_node_cap(a, b))
        counts = [engine.severi_quadric(a, b, r) for r in range(top + 1)]
        for r, n in enumerate(counts):
            if n <= 0:
                raise InconsistencyError(
                    f"nonpositive count {n} at P1XP1 ({a},{b}) r={r}"
                )
            data[("P1XP1", (a, b), r)] = n
        rows.append((chern_quadric(a, b), _log_coefficients(counts), min(a, b) - 1))

    a_polys = {}
    consistent = True
    for r in range(1, r_max + 1):
        equations = [
            (vec, logs[r])
            for vec, logs, max_order in rows
            if r <= max_order and r < len(logs)
        ]
        solution = _solve_linear4(equations)
        poly = ChernPolynomial.linear(*solution)
        for vec, rhs in equations:
            if poly.evaluate(vec) != rhs:
                consistent = False
        a_polys[r] = poly

    log_part = TruncatedSeries(
        {NODE_LABEL: 1},
        r_max,
        {(NODE_LABEL,) * r: p for r, p in a_polys.items()},
    )
    exp_part = exp_series(log_part)
    t_polys = {
        r: exp_part.coefficient((NODE_LABEL,) * r) for r in range(r_max + 1)
    }

    problem = FitProblem(r_max, plane_degrees, quadric_bidegrees, data)
    return FitResult(r_max, a_polys, t_polys, consistent, problem)


def _as_number(value: Fraction):
    return int(value) if value.denominator == 1 else value


def evaluate_counts(result: FitResult, chern, r: int):
    """Predicted count of r-node curves for the given Chern vector."""
    if r not in result.T:
        raise InputError(f"order {r} was not fitted (r_max={result.r_max})")
    return _as_number(result.T[r].evaluate(chern))


def threshold_scan(
    result: FitResult,
    r: int,
    d_range=None,
    engine: SeveriEngine = None,
) -> int:
    """Smallest plane degree from which the fitted polynomial counts exactly.

    Scans the given degrees and returns the first admissible d such that
    every admissible degree from d onward agrees with severi_p2.
    """
    if r < 1 or r not in result.T:
        raise InputError(f"threshold scan needs a fitted order 1..{result.r_max}")
    if d_range is None:
        d_range = range(1, 13)
    engine = engine if engine is not None else SeveriEngine()
    admissible = sorted(d for d in d_range if plane_node_cap(d) >= r)
    if not admissible:
        raise InputError("no degree in the scanned range admits that many nodes")
    threshold = None
    for d in reversed(admissible):
        if engine.severi_p2(d, r) == result.T[r].evaluate(chern_p2(d)):
            threshold = d
        else:
            break
    if threshold is None:
        raise InconsistencyError(
            f"order-{r} polynomial never matches the counts in the scanned range"
        )
    return threshold


def _normalize_table(a_table: dict) -> dict:
    out = {}
    for key, poly in a_table.items():
        if isinstance(key, str):
            key = (key,)
        key = tuple(sorted(key))
        if not isinstance(poly, ChernPolynomial):
            poly = ChernPolynomial(poly)
        out[key] = poly
    return out


def _sub_multisets(parts: tuple) -> list:
    labels = sorted(set(parts))
    counts = [parts.count(lab) for lab in labels]
    subs = []
    for picks in product(*(range(c + 1) for c in counts)):
        if not any(picks):
            continue
        key = []
        for lab, take in zip(labels, picks):
            key.extend([lab] * take)
        subs.append(tuple(key))
    subs.sort(key=lambda k: (len(k), k))
    return subs


def assemble_from_table(a_table: dict, chern, parts):
    """Predicted count for a singularity multiset from user-supplied
    log-coefficients; every sub-multiset of `parts` must be tabulated.
    """
    table = _normalize_table(a_table)
    parts = tuple(sorted(parts))
    for needed in _sub_multisets(parts):
        if needed not in table:
            raise InputError(f"missing entry {','.join(needed)}")

    weights = {}
    for key in list(table) + [parts]:
        for label in key:
            if label not in weights:
                weights[label] = lookup(label).codim
    cap = sum(weights[label] for label in parts)
    series = assemble_series(table, weights, cap)
    return _as_number(extract_universal(series, parts).evaluate(chern))
