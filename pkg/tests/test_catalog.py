import pytest

from curvelab import catalog
from curvelab.errors import InputError
from curvelab.germs import parse_germ
from curvelab.jets import determinacy_window, dim_s0, scheme_length, tjurina_number


def test_catalog_loads_and_validates():
    table = catalog.load_catalog()
    assert len(table) == 24


def test_node_entry():
    e = catalog.lookup("A1")
    assert e.normal_form == parse_germ("x*y")
    assert (e.tau, e.k_used, e.N, e.codim, e.dim_es) == (1, 2, 5, 1, 0)


def test_cusp_entry():
    e = catalog.lookup("A2")
    assert e.normal_form == parse_germ("y^2 - x^3")
    assert (e.tau, e.k_used, e.N, e.codim) == (2, 3, 7, 2)


def test_aliases():
    assert catalog.lookup("node").label == "A1"
    assert catalog.lookup("cusp").label == "A2"


def test_unknown_label():
    with pytest.raises(InputError):
        catalog.lookup("Z9")


def test_ade_series_values():
    for k in range(1, 9):
        e = catalog.lookup(f"A{k}")
        assert e.mu == e.tau == k
        assert e.N == 2 * k + 3
    for k in range(4, 9):
        e = catalog.lookup(f"D{k}")
        assert e.mu == e.tau == k
        assert e.N == 3 * (k - 1)
    assert catalog.lookup("E6").tau == 6
    assert catalog.lookup("E7").tau == 7
    assert catalog.lookup("E8").tau == 8


def test_ordinary_point_entries():
    for n in range(3, 7):
        a = catalog.lookup(f"ord{n}-analytic")
        t = catalog.lookup(f"ord{n}-topological")
        assert a.tau == t.tau == (n - 1) ** 2
        assert a.codim == (n - 1) ** 2
        assert t.dim_es == n - 3
        assert t.codim == (n - 1) ** 2 - (n - 3)
        assert a.N == t.N == scheme_length(a.normal_form, a.k_used)


def test_k_used_within_window():
    for e in catalog.load_catalog().values():
        lo, _ = determinacy_window(e.normal_form)
        assert e.k_used >= lo


def test_stratum_identity_on_analytic_entries():
    for e in catalog.load_catalog().values():
        if e.flavor != "analytic":
            continue
        assert dim_s0(e.normal_form, e.k_used) == e.N - tjurina_number(e.normal_form)


def test_collection_stats_triple_node():
    s = catalog.collection_stats(["A1", "A1", "A1"])
    assert (s.N, s.codim, s.l, s.aut) == (15, 3, 3, 6)


def test_collection_stats_mixed():
    s = catalog.collection_stats(["A2", "E8", "ord5-analytic"])
    assert s.N == 7 + 15 + 25
    assert s.codim == 2 + 8 + 16
    assert (s.l, s.aut) == (3, 1)


def test_collection_stats_empty():
    s = catalog.collection_stats([])
    assert (s.N, s.codim, s.l, s.aut) == (0, 0, 0, 1)


def test_collection_stats_resolves_aliases():
    s = catalog.collection_stats(["node", "A1"])
    assert (s.N, s.codim, s.l, s.aut) == (10, 2, 2, 2)


def test_collection_stats_unknown_label():
    with pytest.raises(InputError):
        catalog.collection_stats(["A1", "Q3"])
