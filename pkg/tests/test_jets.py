import random
from fractions import Fraction

import pytest

from curvelab.errors import CeilingError, InputError
from curvelab.germs import GermPoly, parse_germ
from curvelab.jets import (
    determinacy_window,
    dim_s0,
    germ_report,
    ideal_in_jets,
    jet_dimension,
    milnor_number,
    orbit_tangent_dim,
    scheme_length,
    tjurina_number,
)

NODE = parse_germ("x*y")
CUSP = parse_germ("y^2 - x^3")


def test_ideal_in_jets_node_slab():
    space = ideal_in_jets([NODE], 3, 3)
    assert space.dimension == 1
    assert jet_dimension(3) - space.dimension == 5


def test_ideal_in_jets_power_only():
    space = ideal_in_jets([], 1, 4)
    assert space.dimension == 9


def test_ideal_in_jets_cusp():
    space = ideal_in_jets([CUSP], None, 4)
    assert space.dimension == 3
    assert jet_dimension(4) - space.dimension == 7


def test_ideal_in_jets_requires_something():
    with pytest.raises(InputError):
        ideal_in_jets([], None, 3)
    with pytest.raises(InputError):
        ideal_in_jets([NODE], None, 0)


def test_milnor_numbers():
    assert milnor_number(NODE) == 1
    assert milnor_number(CUSP) == 2
    assert milnor_number(parse_germ("x^4 - y^4")) == 9


def test_milnor_smooth_germ_is_zero():
    assert milnor_number(parse_germ("x + y^2")) == 0


def test_tjurina_numbers():
    assert tjurina_number(NODE) == 1
    assert tjurina_number(CUSP) == 2
    assert tjurina_number(parse_germ("x^5 - y^5")) == 16


def test_non_isolated_hits_ceiling():
    f = parse_germ("x^2*y^2")
    with pytest.raises(CeilingError):
        milnor_number(f, ceiling=10)
    with pytest.raises(CeilingError):
        determinacy_window(f, ceiling=10)


def test_determinacy_windows():
    assert determinacy_window(NODE) == (1, 2)
    assert determinacy_window(CUSP) == (2, 3)
    assert determinacy_window(parse_germ("x^4 - y^4")) == (4, 5)
    assert determinacy_window(parse_germ("x + y^2")) == (0, 1)


def test_scheme_lengths():
    assert scheme_length(NODE, 2) == 5
    assert scheme_length(CUSP, 3) == 7
    # homogeneous triple point: only f itself survives truncation at order 4,
    # so the length is 10 - 1
    assert scheme_length(parse_germ("x^3 - y^3"), 3) == 9


def test_orbit_tangent_dims():
    assert orbit_tangent_dim(NODE, 2) == 3
    assert orbit_tangent_dim(CUSP, 3) == 6
    # smooth germ: the orbit closure is the whole positive-degree slab
    assert orbit_tangent_dim(parse_germ("x"), 2) == jet_dimension(3) - 1


def test_dim_s0_values_and_contract():
    cases = [(NODE, 2), (CUSP, 3), (parse_germ("x^3 - y^3"), 3)]
    expected = [4, 5, 5]
    for (f, k), want in zip(cases, expected):
        got = dim_s0(f, k)
        assert got == want
        assert got == scheme_length(f, k) - tjurina_number(f)


def test_dim_s0_degenerate_input():
    with pytest.raises(InputError):
        dim_s0(parse_germ("x^3 - y^3"), 1)


def test_stabilization_of_quotient_dimension():
    gens = [CUSP.partial_x(), CUSP.partial_y()]
    for K in range(3, 8):
        assert jet_dimension(K) - ideal_in_jets(gens, None, K).dimension == 2


def test_unit_scaling_invariance():
    for f in [NODE, CUSP, parse_germ("x^3 + y^5")]:
        g = f.scale(Fraction(-7, 3))
        assert milnor_number(g) == milnor_number(f)
        assert tjurina_number(g) == tjurina_number(f)


def _random_invertible(rng):
    while True:
        a, b, c, d = (Fraction(rng.randint(-3, 3)) for _ in range(4))
        if a * d - b * c != 0:
            return a, b, c, d


def test_linear_coordinate_invariance():
    rng = random.Random(7)
    for f in [NODE, CUSP, parse_germ("x^3 + y^4"), parse_germ("x^2*y - y^4")]:
        mu, tau = milnor_number(f), tjurina_number(f)
        window = determinacy_window(f)
        mult = f.multiplicity()
        for _ in range(4):
            g = f.linear_substitute(*_random_invertible(rng))
            assert milnor_number(g) == mu
            assert tjurina_number(g) == tau
            assert determinacy_window(g) == window
            assert g.multiplicity() == mult


def test_tau_at_most_mu_on_random_germs():
    rng = random.Random(11)
    checked = 0
    while checked < 12:
        terms = {}
        for _ in range(rng.randint(2, 5)):
            i, j = rng.randint(0, 4), rng.randint(0, 4)
            if 1 <= i + j <= 4:
                terms[(i, j)] = Fraction(rng.randint(-4, 4))
        f = GermPoly(terms)
        if f.is_zero() or f.multiplicity() < 2:
            continue
        try:
            mu = milnor_number(f, ceiling=12)
        except CeilingError:
            continue
        assert tjurina_number(f, ceiling=12) <= mu
        checked += 1


def test_quasi_homogeneous_mu_equals_tau():
    for text in ["x^3 - y^3", "x^4 - y^4", "y^2 - x^5", "x^3 + y^4", "x^3 + y^5"]:
        f = parse_germ(text)
        assert milnor_number(f) == tjurina_number(f)


def test_germ_report_defaults_to_upper_window_bound():
    rep = germ_report(CUSP)
    assert rep.milnor == 2
    assert rep.tjurina == 2
    assert rep.multiplicity == 2
    assert rep.determinacy_window == (2, 3)
    assert rep.k_used == 3
    assert rep.scheme_length_at == {3: 7}
    assert rep.orbit_tangent_dim == 6
    assert rep.dim_s0 == 5
    d = rep.to_dict()
    assert d["determinacy_window"] == [2, 3]
    assert d["scheme_length_at"] == {"3": 7}
