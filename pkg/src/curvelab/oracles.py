"""Two independent oracles for nodal curve counts.

floor_diagram_oracle: exhaustive enumeration of weighted labeled floor
diagrams with marking counts; exponential, desk scale only.

pencil_discriminant_oracle: counts singular members of a random pencil
by eliminating the pencil parameter, taking a resultant in y, and
counting distinct roots; repeated with independent samples that must
agree.  All arithmetic exact over the integers.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .errors import InconsistencyError, InputError

# ---------------------------------------------------------------------------
# floor diagrams


@lru_cache(maxsize=None)
def _weight_multisets(budget: int) -> tuple:
    """Non-increasing positive weight tuples with sum <= budget."""
    out = [()]

    def rec(prefix, remaining, max_part):
        for w in range(min(remaining, max_part), 0, -1):
            ext = prefix + (w,)
            out.append(ext)
            rec(ext, remaining - w, w)

    rec((), budget, budget)
    return tuple(out)


def _marking_count(d: int, edges: list) -> int:
    """Number of markings of one diagram, times the weight multiplicity."""
    in_w = [0] * (d + 1)
    out_w = [0] * (d + 1)
    mu = 1
    for (i, j, w) in edges:
        out_w[i] += w
        in_w[j] += w
        mu *= w * w
    ground = [0] * (d + 1)
    for v in range(1, d + 1):
        ground[v] = 1 - in_w[v] + out_w[v]
        if ground[v] < 0:
            return 0

    # every mark is eligible for an interval of slots; slot s sits just
    # before vertex s+1 (slot 0 = before everything)
    interval_counts = {}

    def bump(lo, hi, n=1):
        if n:
            interval_counts[(lo, hi)] = interval_counts.get((lo, hi), 0) + n

    for (i, j, w) in edges:
        bump(i, j - 1)
    for v in range(1, d + 1):
        bump(0, v - 1, ground[v])

    classes = sorted(interval_counts)
    counts0 = tuple(interval_counts[c] for c in classes)
    memo = {}

    def rec(s, remaining):
        if s == d:
            return 1 if not any(remaining) else 0
        state = (s, remaining)
        if state in memo:
            return memo[state]
        open_idx = [
            k for k, (lo, hi) in enumerate(classes)
            if lo <= s <= hi and remaining[k] > 0
        ]
        total = 0

        def choose(pos, rem, picked, ways):
            nonlocal total
            if pos == len(open_idx):
                total += ways * factorial(picked) * rec(s + 1, rem)
                return
            k = open_idx[pos]
            lo, hi = classes[k]
            options = (
                [rem[k]] if hi == s else range(rem[k] + 1)
            )
            for take in options:
                nrem = rem[:k] + (rem[k] - take,) + rem[k + 1:]
                choose(pos + 1, nrem, picked + take, ways * comb(rem[k], take))

        choose(0, remaining, 0, 1)
        memo[state] = total
        return total

    labeled = rec(0, counts0)

    denom = 1
    for v in range(1, d + 1):
        denom *= factorial(ground[v])
    groups = {}
    for e in edges:
        groups[e] = groups.get(e, 0) + 1
    for c in groups.values():
        denom *= factorial(c)
    if labeled % denom:
        raise InconsistencyError("marking count is not divisible by its symmetry order")
    return mu * (labeled // denom)


def floor_diagram_oracle(d: int, delta: int) -> int:
    """Nodal count by summing multiplicity x markings over all diagrams.

    Diagrams: vertices 1..d, directed weighted multi-edges i -> j (i < j),
    with 1 - in(v) + out(v) >= 0 at every vertex and exactly
    d(d-1)/2 - delta edges.
    """
    if not isinstance(d, int) or not isinstance(delta, int):
        raise InputError("degree and node count must be integers")
    if not (1 <= d <= 6) or not (0 <= delta <= 4):
        raise InputError("out of supported range: need 1 <= d <= 6 and 0 <= delta <= 4")
    edge_target = d * (d - 1) // 2 - delta
    if edge_target < 0:
        return 0

    total = 0
    in_w = [0] * (d + 1)
    out_w = [0] * (d + 1)
    edges = []

    def capacity_bound(next_target: int) -> int:
        # upper bound on edges the remaining targets can still absorb
        known = {}
        bound = 0
        for t in range(next_target, 1, -1):
            ub = 1 + sum(in_w[u] for u in range(next_target + 1, d + 1)) \
                   + sum(known.get(u, 0) for u in range(t + 1, next_target + 1))
            known[t] = ub
            bound += ub
        return bound

    def fill_target(j: int):
        nonlocal total
        if j == 1:
            if len(edges) == edge_target:
                total += _marking_count(d, edges)
            return
        if len(edges) > edge_target:
            return
        if len(edges) + capacity_bound(j) < edge_target:
            return
        budget = 1 + out_w[j]

        def pick_source(i: int, left: int):
            if i == 0:
                fill_target(j - 1)
                return
            for weights in _weight_multisets(left):
                used = sum(weights)
                for w in weights:
                    edges.append((i, j, w))
                    out_w[i] += w
                in_w[j] += used
                pick_source(i - 1, left - used)
                in_w[j] -= used
                for w in weights:
                    edges.pop()
                    out_w[i] -= w

        pick_source(j - 1, budget)

    fill_target(d)
    return total


# ---------------------------------------------------------------------------
# integer univariate polynomial helpers (coefficient lists, index = power)


def _trim_poly(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_degree(p: list) -> int:
    return len(p) - 1


def _poly_derivative(p: list) -> list:
    return _trim_poly([k * c for k, c in enumerate(p)][1:])


def _poly_content(p: list) -> int:
    g = 0
    for c in p:
        g = _gcd_int(g, c)
    return g or 1


def _gcd_int(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def _poly_primitive(p: list) -> list:
    c = _poly_content(p)
    return [x // c for x in p]


def _poly_pseudo_rem(u: list, v: list) -> list:
    u = list(u)
    dv = _poly_degree(v)
    lv = v[-1]
    while _poly_degree(u) >= dv and u:
        du = _poly_degree(u)
        lead = u[-1]
        u = [c * lv for c in u]
        shift = du - dv
        for k, c in enumerate(v):
            u[k + shift] -= lead * c
        _trim_poly(u)
        if not u:
            break
    return u


def _poly_gcd(u: list, v: list) -> list:
    u, v = _trim_poly(list(u)), _trim_poly(list(v))
    if not u:
        return _poly_primitive(v) if v else []
    if not v:
        return _poly_primitive(u)
    u, v = _poly_primitive(u), _poly_primitive(v)
    while v:
        r = _poly_pseudo_rem(u, v)
        u, v = v, _poly_primitive(r) if r else []
    return u


def _distinct_root_count(p: list) -> int:
    """deg p minus deg gcd(p, p'), i.e. the number of distinct complex roots."""
    g = _poly_gcd(p, _poly_derivative(list(p)))
    return _poly_degree(p) - _poly_degree(g)


def _is_squarefree(p: list) -> bool:
    return _poly_degree(_poly_gcd(p, _poly_derivative(list(p)))) == 0


# ---------------------------------------------------------------------------
# bivariate integer polynomials as dicts (i, j) -> coeff


def _p2_mul(A: dict, B: dict) -> dict:
    out = {}
    for (i1, j1), c1 in A.items():
        for (i2, j2), c2 in B.items():
            k = (i1 + i2, j1 + j2)
            out[k] = out.get(k, 0) + c1 * c2
    return {k: c for k, c in out.items() if c}


def _p2_sub(A: dict, B: dict) -> dict:
    out = dict(A)
    for k, c in B.items():
        out[k] = out.get(k, 0) - c
    return {k: c for k, c in out.items() if c}


def _p2_dx(A: dict) -> dict:
    return {(i - 1, j): c * i for (i, j), c in A.items() if i}


def _p2_dy(A: dict) -> dict:
    return {(i, j - 1): c * j for (i, j), c in A.items() if j}


def _y_coefficients(A: dict) -> list:
    """List over y-powers of x-coefficient lists."""
    if not A:
        return []
    ydeg = max(j for (_, j) in A)
    xdeg = max(i for (i, _) in A)
    out = [[0] * (xdeg + 1) for _ in range(ydeg + 1)]
    for (i, j), c in A.items():
        out[j][i] = c
    return [_trim_poly(row) for row in out]


def _poly_eval(p: list, t: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = acc * t + c
    return acc


def _bareiss_det(M: list) -> int:
    n = len(M)
    if n == 0:
        return 1
    M = [row[:] for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for r in range(k + 1, n):
                if M[r][k] != 0:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * pivot - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = pivot
    return sign * M[n - 1][n - 1]


def _resultant_y(A: dict, B: dict) -> list:
    """Res_y(A, B) as an integer polynomial in x (actual y-degrees)."""
    ca = _y_coefficients(A)
    cb = _y_coefficients(B)
    m, n = len(ca) - 1, len(cb) - 1
    if m < 1 or n < 1:
        raise InputError("resultant needs positive y-degree in both arguments")
    size = m + n
    deg_bound = n * max(_poly_degree(p) for p in ca) + m * max(_poly_degree(p) for p in cb)
    nodes = []
    t = 0
    while len(nodes) < deg_bound + 1:
        nodes.append(t)
        t = -t if t > 0 else -t + 1
    values = []
    for t in nodes:
        arow = [_poly_eval(p, t) for p in ca]
        brow = [_poly_eval(p, t) for p in cb]
        M = []
        for s in range(n):
            M.append([0] * s + arow[::-1] + [0] * (size - s - m - 1))
        for s in range(m):
            M.append([0] * s + brow[::-1] + [0] * (size - s - n - 1))
        values.append(_bareiss_det(M))
    return _interpolate_integer_poly(nodes, values)


def _interpolate_integer_poly(nodes: list, values: list) -> list:
    # Newton divided differences, exact rational, then monomial expansion
    k = len(nodes)
    coef = [Fraction(v) for v in values]
    for level in range(1, k):
        for i in range(k - 1, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (nodes[i] - nodes[i - level])
    poly = [Fraction(0)] * k
    acc = [Fraction(1)]  # product of (x - nodes[0..level-1])
    for level in range(k):
        for p, c in enumerate(acc):
            poly[p] += coef[level] * c
        nxt = [Fraction(0)] * (len(acc) + 1)
        for p, c in enumerate(acc):
            nxt[p] -= c * nodes[level]
            nxt[p + 1] += c
        acc = nxt
    out = []
    for q in poly:
        if q.denominator != 1:
            raise InconsistencyError("resultant interpolation produced a non-integer")
        out.append(q.numerator)
    return _trim_poly(out)


# ---------------------------------------------------------------------------
# the pencil-discriminant oracle


def _sample_poly(rng, xdeg: int, ydeg: int, total_cap: int = None) -> dict:
    out = {}
    for i in range(xdeg + 1):
        for j in range(ydeg + 1):
            if total_cap is not None and i + j > total_cap:
                continue
            c = rng.randint(-9, 9)
            if c:
                out[(i, j)] = c
    return out


def _lc_is_constant(A: dict, expected_ydeg: int) -> bool:
    if not A:
        return False
    ydeg = max(j for (_, j) in A)
    if ydeg != expected_ydeg:
        return False
    return all(i == 0 for (i, j) in A if j == ydeg)


def _lcy_poly(A: dict) -> list:
    ydeg = max(j for (_, j) in A)
    row = {}
    for (i, j), c in A.items():
        if j == ydeg:
            row[i] = c
    out = [0] * (max(row) + 1)
    for i, c in row.items():
        out[i] = c
    return _trim_poly(out)


def _pencil_count_plane(d: int, rng) -> int:
    for _attempt in range(12):
        F = _sample_poly(rng, d, d, total_cap=d)
        G = _sample_poly(rng, d, d, total_cap=d)
        Fx, Fy = _p2_dx(F), _p2_dy(F)
        Gx, Gy = _p2_dx(G), _p2_dy(G)
        E1 = _p2_sub(_p2_mul(Fx, Gy), _p2_mul(Fy, Gx))
        E2 = _p2_sub(_p2_mul(F, Gx), _p2_mul(Fx, G))
        if not (
            _lc_is_constant(E1, 2 * d - 2)
            and _lc_is_constant(E2, 2 * d - 1)
            and _lc_is_constant(Fx, d - 1)
            and _lc_is_constant(Gx, d - 1)
        ):
            continue
        fake = _resultant_y(Fx, Gx)
        if not fake or _poly_degree(fake) != (d - 1) ** 2 or not _is_squarefree(fake):
            continue
        R = _resultant_y(E1, E2)
        if not R or not _is_squarefree(R):
            continue
        count = _poly_degree(R) - (d - 1) ** 2
        if count < 0:
            continue
        return count
    raise InconsistencyError(
        "pencil oracle could not draw a non-degenerate plane sample after retries"
    )


def _pencil_count_quadric(a: int, b: int, rng) -> int:
    # Counts are symmetric in the bidegree, so normalise to a <= b; the
    # elimination below needs the y-direction to carry the larger degree.
    if a > b:
        a, b = b, a
    # With a >= 2 the pair (E1, F*Gx - Fx*G) is unusable: both top
    # y-coefficients are multiples of fb'*gb - fb*gb', so the resultant
    # always degenerates at infinity.  Pairing E1 with F*Gy - Fy*G instead
    # gives coprime leading coefficients; its spurious zeros are the common
    # roots of (Fy, Gy), of which there are 2a(b-1).
    expected_fake = 0 if a == 1 else 2 * a * (b - 1)
    for _attempt in range(12):
        F = _sample_poly(rng, a, b)
        G = _sample_poly(rng, a, b)
        Fx, Fy = _p2_dx(F), _p2_dy(F)
        Gx, Gy = _p2_dx(G), _p2_dy(G)
        E1 = _p2_sub(_p2_mul(Fx, Gy), _p2_mul(Fy, Gx))
        if a == 1:
            E2 = _p2_sub(_p2_mul(F, Gx), _p2_mul(Fx, G))
        else:
            E2 = _p2_sub(_p2_mul(F, Gy), _p2_mul(Fy, G))
        if not E1 or not E2:
            continue
        if _poly_degree(_poly_gcd(_lcy_poly(E1), _lcy_poly(E2))) != 0:
            continue
        if a > 1:
            if not Fy or not Gy:
                continue
            if _poly_degree(_poly_gcd(_lcy_poly(Fy), _lcy_poly(Gy))) != 0:
                continue
            fake = _resultant_y(Fy, Gy)
            if not fake or _poly_degree(fake) != expected_fake or not _is_squarefree(fake):
                continue
        R = _resultant_y(E1, E2)
        if not R or not _is_squarefree(R):
            continue
        count = _poly_degree(R) - expected_fake
        if count < 0:
            continue
        return count
    raise InconsistencyError(
        "pencil oracle could not draw a non-degenerate quadric sample after retries"
    )


def pencil_discriminant_oracle(surface: str, degree, seed: int = 0) -> int:
    """Count singular members of a random pencil; three independent
    samples must agree or the call fails loudly.
    """
    surface_key = str(surface).upper()
    values = []
    if surface_key == "P2":
        d = degree
        if not isinstance(d, int) or not (2 <= d <= 5):
            raise InputError("plane pencil oracle supports 2 <= d <= 5")
        for i in range(3):
            rng = random.Random(1000003 * seed + i)
            values.append(_pencil_count_plane(d, rng))
    elif surface_key == "P1XP1":
        try:
            a, b = degree
        except (TypeError, ValueError):
            raise InputError("quadric pencil oracle needs a bidegree pair (a, b)")
        if not (isinstance(a, int) and isinstance(b, int)) or not (
            1 <= a <= 3 and 1 <= b <= 3
        ):
            raise InputError("quadric pencil oracle supports 1 <= a, b <= 3")
        for i in range(3):
            rng = random.Random(1000003 * seed + i)
            values.append(_pencil_count_quadric(a, b, rng))
    else:
        raise InputError(f"unknown surface {surface!r}; use P2 or P1XP1")
    if len(set(values)) != 1:
        raise InconsistencyError(
            f"pencil oracle samples disagree: {values}; inputs {surface} {degree}"
        )
    return values[0]
