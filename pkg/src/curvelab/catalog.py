"""Fixed library of named singularity types.

Entries live in data/catalog.json (label, flavor, normal form, jet order,
equisingular-stratum dimension, and the cached numeric invariants).  The
cache is never trusted: every number is recomputed at load time and a
mismatch aborts loudly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from math import factorial

from .errors import InconsistencyError, InputError
from .germs import GermPoly, parse_germ
from .jets import determinacy_window, milnor_number, scheme_length, tjurina_number

ALIASES = {"node": "A1", "cusp": "A2"}


@dataclass(frozen=True)
class SingularityType:
    label: str
    flavor: str  # "analytic" | "topological"
    normal_form: GermPoly
    normal_form_text: str
    k_used: int
    dim_es: int
    mu: int
    tau: int
    N: int
    codim: int

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "flavor": self.flavor,
            "normal_form": self.normal_form_text,
            "k_used": self.k_used,
            "dim_es": self.dim_es,
            "mu": self.mu,
            "tau": self.tau,
            "N": self.N,
            "codim": self.codim,
        }


@dataclass(frozen=True)
class CollectionStats:
    N: int
    codim: int
    l: int
    aut: int


def _validate(raw: dict) -> SingularityType:
    label = raw["label"]
    f = parse_germ(raw["normal_form"])
    mu = milnor_number(f)
    tau = tjurina_number(f)
    window = determinacy_window(f)
    k_used = raw["k_used"]
    n_len = scheme_length(f, k_used)
    dim_es = raw["dim_es"]
    flavor = raw["flavor"]

    def check(name, stored, computed):
        if stored != computed:
            raise InconsistencyError(
                f"catalog entry {label}: stored {name}={stored} "
                f"but germ computation gives {computed}"
            )

    check("mu", raw["mu"], mu)
    check("tau", raw["tau"], tau)
    check("N", raw["N"], n_len)
    if flavor == "analytic":
        check("dim_es", dim_es, 0)
        check("codim", raw["codim"], tau)
    elif flavor == "topological":
        check("codim", raw["codim"], tau - dim_es)
    else:
        raise InconsistencyError(f"catalog entry {label}: unknown flavor {flavor!r}")
    if k_used < window[0]:
        raise InconsistencyError(
            f"catalog entry {label}: k_used={k_used} below determinacy window {window}"
        )
    return SingularityType(
        label=label,
        flavor=flavor,
        normal_form=f,
        normal_form_text=raw["normal_form"],
        k_used=k_used,
        dim_es=dim_es,
        mu=mu,
        tau=tau,
        N=n_len,
        codim=raw["codim"],
    )


_CATALOG: dict | None = None


def load_catalog() -> dict:
    """Label -> SingularityType, validated once per process."""
    global _CATALOG
    if _CATALOG is None:
        text = resources.files("curvelab").joinpath("data/catalog.json").read_text()
        doc = json.loads(text)
        table = {}
        for raw in doc["entries"]:
            entry = _validate(raw)
            if entry.label in table:
                raise InconsistencyError(f"duplicate catalog label {entry.label}")
            table[entry.label] = entry
        _CATALOG = table
    return _CATALOG


def labels() -> list[str]:
    return list(load_catalog().keys())


def lookup(label: str) -> SingularityType:
    table = load_catalog()
    key = ALIASES.get(label, label)
    if key not in table:
        raise InputError(f"unknown singularity label {label!r}")
    return table[key]


def aut_count(parts) -> int:
    """Order of the permutation symmetry of a multiset of labels."""
    counts = {}
    for p in parts:
        counts[p] = counts.get(p, 0) + 1
    out = 1
    for c in counts.values():
        out *= factorial(c)
    return out


def collection_stats(parts) -> CollectionStats:
    resolved = [lookup(p) for p in parts]
    canonical = [e.label for e in resolved]
    return CollectionStats(
        N=sum(e.N for e in resolved),
        codim=sum(e.codim for e in resolved),
        l=len(resolved),
        aut=aut_count(canonical),
    )
