"""Severi degrees on the plane and the quadric surface.

Both counts run on a tangency-profile recursion relative to a fixed
line (a ruling line on the quadric): either one unassigned contact is
promoted to an assigned one, or the fixed line splits off and leaves a
lower-degree residual curve with adjusted profiles and node count.
Every value is an exact arbitrary-precision integer, memoized in a
store that can persist to a line-oriented cache file.
"""

from __future__ import annotations

from math import comb

from .errors import (
    AdmissibilityError,
    CeilingError,
    InconsistencyError,
    InputError,
)

DEFAULT_DEGREE_CEILING = 12


# ---------------------------------------------------------------------------
# tangency profiles: entry i counts contacts of order i+1


def trim(profile) -> tuple:
    t = tuple(profile)
    while t and t[-1] == 0:
        t = t[:-1]
    return t


def profile_size(profile) -> int:
    return sum(profile)


def profile_moment(profile) -> int:
    return sum((i + 1) * c for i, c in enumerate(profile))


def _bump(profile, index: int, amount: int = 1) -> tuple:
    t = list(profile)
    while len(t) <= index:
        t.append(0)
    t[index] += amount
    return trim(t)


def _add_profiles(p, q) -> tuple:
    n = max(len(p), len(q))
    return trim(
        tuple(
            (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0)
            for i in range(n)
        )
    )


def _subprofiles(profile):
    """All componentwise-dominated profiles, untrimmed length."""
    if not profile:
        yield ()
        return
    head = profile[0]
    for rest in _subprofiles(profile[1:]):
        for c in range(head + 1):
            yield (c,) + rest


_PARTITIONS_CACHE: dict = {}


def _partition_profiles(n: int) -> list:
    """All profiles gamma with sum of (i+1)*gamma[i] = n."""
    if n in _PARTITIONS_CACHE:
        return _PARTITIONS_CACHE[n]

    def rec(remaining, max_part):
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, max_part), 0, -1):
            for tail in rec(remaining - part, part):
                yield (part,) + tail

    out = []
    for parts in rec(n, n):
        gamma = [0] * (parts[0] if parts else 0)
        for p in parts:
            gamma[p - 1] += 1
        out.append(trim(tuple(gamma)))
    _PARTITIONS_CACHE[n] = out
    return out


# ---------------------------------------------------------------------------
# memo store with persistence


def _format_profile(profile) -> str:
    return ",".join(str(c) for c in profile) if profile else "-"


def _parse_profile(text: str) -> tuple:
    if text == "-":
        return ()
    try:
        return trim(tuple(int(c) for c in text.split(",")))
    except ValueError as exc:
        raise InputError(f"bad profile field {text!r} in cache file") from exc


class MemoStore:
    """Key -> value table with provenance counters.

    A key never remaps to a different value; a conflicting put (e.g. a
    corrupted cache colliding with a fresh computation) fails loudly.
    """

    def __init__(self):
        self.table = {}
        self.origin = {}
        self.computed = 0
        self.hits = 0
        self.loaded = 0

    def __len__(self):
        return len(self.table)

    def get(self, key):
        value = self.table.get(key)
        if value is not None:
            self.hits += 1
        return value

    def put(self, key, value: int, origin: str = "computed"):
        old = self.table.get(key)
        if old is not None:
            if old != value:
                raise InconsistencyError(
                    f"memo key {key} already holds {old}, refusing to store {value}"
                )
            return
        if value < 0:
            raise InconsistencyError(f"negative count {value} for key {key}")
        self.table[key] = value
        self.origin[key] = origin
        if origin == "computed":
            self.computed += 1
        else:
            self.loaded += 1

    def stats(self) -> dict:
        return {
            "computed": self.computed,
            "hits": self.hits,
            "loaded": self.loaded,
            "size": len(self.table),
        }

    @staticmethod
    def _key_to_line(key, value) -> str:
        surface, degree, delta, alpha, beta = key
        deg = f"{degree[0]},{degree[1]}" if surface == "P1XP1" else str(degree)
        return (
            f"{surface} {deg} {delta} "
            f"{_format_profile(alpha)} {_format_profile(beta)} {value}"
        )

    @staticmethod
    def _line_to_key(line: str):
        fields = line.split()
        if len(fields) != 6:
            raise InputError(f"bad cache line {line!r}")
        surface, deg, delta, alpha, beta, value = fields
        if surface == "P2":
            degree = int(deg)
        elif surface == "P1XP1":
            a, _, b = deg.partition(",")
            if not b:
                raise InputError(f"bad bidegree field {deg!r} in cache file")
            degree = (int(a), int(b))
        else:
            raise InputError(f"unknown surface {surface!r} in cache file")
        key = (surface, degree, int(delta), _parse_profile(alpha), _parse_profile(beta))
        return key, int(value)

    def save(self, path):
        lines = sorted(self._key_to_line(k, v) for k, v in self.table.items())
        with open(path, "w") as fh:
            for line in lines:
                fh.write(line + "\n")

    def load(self, path):
        with open(path) as fh:
            for raw in fh:
                line = raw.strip()
                if not line:
                    continue
                key, value = self._line_to_key(line)
                self.put(key, value, origin="loaded")


# ---------------------------------------------------------------------------
# the engine


def plane_node_cap(d: int) -> int:
    """Most nodes a reduced degree-d curve carries (d generic lines)."""
    return d * (d - 1) // 2


def quadric_node_cap(a: int, b: int) -> int:
    """Most nodes on a reduced (a,b) curve (union of rulings)."""
    return a * b


class SeveriEngine:
    def __init__(self, store: MemoStore = None, degree_ceiling: int = DEFAULT_DEGREE_CEILING):
        self.store = store if store is not None else MemoStore()
        self.degree_ceiling = degree_ceiling

    # -- plane ------------------------------------------------------------

    def severi_p2(self, d: int, delta: int) -> int:
        if not isinstance(d, int) or not isinstance(delta, int) or d < 1 or delta < 0:
            raise InputError("need degree d >= 1 and node count delta >= 0")
        if d > self.degree_ceiling:
            raise CeilingError(f"degree {d} exceeds ceiling {self.degree_ceiling}")
        if delta > plane_node_cap(d):
            raise AdmissibilityError(
                f"delta={delta} exceeds the nodal cap {plane_node_cap(d)} for degree {d}"
            )
        return self._p2(d, delta, (), (d,))

    def _p2(self, d: int, delta: int, alpha: tuple, beta: tuple) -> int:
        key = ("P2", d, delta, alpha, beta)
        cached = self.store.get(key)
        if cached is not None:
            return cached

        if d == 1:
            value = 1 if delta == 0 else 0
            self.store.put(key, value)
            return value

        value = 0
        # promote one unassigned contact of order k to an assigned one
        for i, count in enumerate(beta):
            if count > 0:
                value += (i + 1) * self._p2(
                    d, delta, _bump(alpha, i), _bump(beta, i, -1)
                )
        # split off the fixed line; residual has degree d-1
        dd = d - 1
        moment_beta = profile_moment(beta)
        for alpha_p in _subprofiles(alpha):
            rem = dd - profile_moment(alpha_p) - moment_beta
            if rem < 0:
                continue
            alpha_p = trim(alpha_p)
            comb_alpha = 1
            for i, c in enumerate(alpha_p):
                comb_alpha *= comb(alpha[i], c)
            for gamma in _partition_profiles(rem):
                delta_p = delta - dd + profile_size(gamma)
                if delta_p < 0 or delta_p > plane_node_cap(dd):
                    continue
                beta_p = _add_profiles(beta, gamma)
                factor = comb_alpha
                for i, c in enumerate(gamma):
                    if c:
                        factor *= (i + 1) ** c * comb(beta_p[i], beta[i] if i < len(beta) else 0)
                value += factor * self._p2(dd, delta_p, alpha_p, beta_p)

        self.store.put(key, value)
        return value

    # -- quadric ----------------------------------------------------------

    def severi_quadric(self, a: int, b: int, delta: int) -> int:
        if (
            not isinstance(a, int)
            or not isinstance(b, int)
            or not isinstance(delta, int)
            or a < 1
            or b < 1
            or delta < 0
        ):
            raise InputError("need bidegree a, b >= 1 and node count delta >= 0")
        if max(a, b) > self.degree_ceiling:
            raise CeilingError(
                f"bidegree ({a},{b}) exceeds ceiling {self.degree_ceiling}"
            )
        if delta > quadric_node_cap(a, b):
            raise AdmissibilityError(
                f"delta={delta} exceeds the nodal cap {quadric_node_cap(a, b)} "
                f"for bidegree ({a},{b})"
            )
        return self._quadric(a, b, delta, (), (b,))

    def _quadric(self, a: int, b: int, delta: int, alpha: tuple, beta: tuple) -> int:
        key = ("P1XP1", (a, b), delta, alpha, beta)
        cached = self.store.get(key)
        if cached is not None:
            return cached

        if a == 0:
            # class (0,b): b ruling lines, transversal to the fixed line,
            # no nodes; profiles may only hold order-1 contacts
            ok = delta == 0 and len(alpha) <= 1 and len(beta) <= 1
            value = 1 if ok else 0
            self.store.put(key, value)
            return value

        value = 0
        for i, count in enumerate(beta):
            if count > 0:
                value += (i + 1) * self._quadric(
                    a, b, delta, _bump(alpha, i), _bump(beta, i, -1)
                )
        # split off the fixed ruling line; residual class (a-1, b) still
        # meets the line in b points
        moment_beta = profile_moment(beta)
        for alpha_p in _subprofiles(alpha):
            rem = b - profile_moment(alpha_p) - moment_beta
            if rem < 0:
                continue
            alpha_p = trim(alpha_p)
            comb_alpha = 1
            for i, c in enumerate(alpha_p):
                comb_alpha *= comb(alpha[i], c)
            for gamma in _partition_profiles(rem):
                delta_p = delta - b + profile_size(gamma)
                if delta_p < 0 or delta_p > (a - 1) * b:
                    continue
                beta_p = _add_profiles(beta, gamma)
                factor = comb_alpha
                for i, c in enumerate(gamma):
                    if c:
                        factor *= (i + 1) ** c * comb(beta_p[i], beta[i] if i < len(beta) else 0)
                value += factor * self._quadric(a - 1, b, delta_p, alpha_p, beta_p)

        self.store.put(key, value)
        return value


def severi_p2(d: int, delta: int, engine: SeveriEngine = None) -> int:
    return (engine or SeveriEngine()).severi_p2(d, delta)


def severi_quadric(a: int, b: int, delta: int, engine: SeveriEngine = None) -> int:
    return (engine or SeveriEngine()).severi_quadric(a, b, delta)
