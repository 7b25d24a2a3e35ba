import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from helpers import random_nonzero_degree_prefoam, random_prefoam
from sl3webs import zoo
from sl3webs.errors import MalformedFoam, NotClosed, ParseError
from sl3webs.foams import (Facet, FrobElement, PreFoam, basis_degree,
                           comultiply, degree, disjoint_union,
                           euler_characteristic, evaluate, foam_to_text,
                           frob_trace, handle_element, load_foam, parse_foam,
                           save_foam, theta_value)

frobs = st.tuples(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4)
                  ).map(lambda t: FrobElement(*t))


# --- the algebra ------------------------------------------------------------


def test_x_cubed_is_zero():
    x = FrobElement.x_power(1)
    assert x * x == FrobElement.x_power(2)
    assert x * x * x == FrobElement()
    assert FrobElement.x_power(5) == FrobElement()


def test_trace_values():
    assert frob_trace(FrobElement.x_power(2)) == -1
    assert frob_trace(FrobElement.x_power(1)) == 0
    assert frob_trace(FrobElement.x_power(0)) == 0
    assert frob_trace(handle_element()) == 3


def test_basis_degrees():
    assert [basis_degree(k) for k in (0, 1, 2)] == [-2, 0, 2]


@given(frobs, frobs, frobs)
def test_frob_ring_laws(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_comultiply_of_one():
    assert comultiply(FrobElement.x_power(0), 2) == {
        (2, 0): -1, (1, 1): -1, (0, 2): -1}


def test_comultiply_counit_identity():
    # (tau (x) id) Delta = id, on each basis element
    for k in range(3):
        terms = comultiply(FrobElement.x_power(k), 2)
        out = FrobElement()
        for (i, j), c in terms.items():
            out = out + FrobElement.x_power(j, c * frob_trace(FrobElement.x_power(i)))
        assert out == FrobElement.x_power(k)


def test_comultiply_single_leg_is_identity():
    a = FrobElement(2, -1, 3)
    assert comultiply(a, 1) == {(0,): 2, (1,): -1, (2,): 3}


def test_theta_form():
    assert theta_value(0, 1, 2) == 1
    assert theta_value(1, 2, 0) == 1
    assert theta_value(2, 0, 1) == 1
    assert theta_value(0, 2, 1) == -1
    assert theta_value(2, 1, 0) == -1
    assert theta_value(1, 0, 2) == -1
    assert theta_value(0, 0, 2) == 0
    assert theta_value(1, 1, 1) == 0
    assert theta_value(0, 1, 3) == 0


# --- closed surfaces ----------------------------------------------------------


def sphere(dots):
    return PreFoam("s", {0: Facet(genus=0, dots=dots, slots=0)}, {})


def test_sphere_values():
    assert evaluate(sphere(2)) == -1
    assert evaluate(sphere(0)) == 0
    assert evaluate(sphere(1)) == 0
    assert evaluate(sphere(3)) == 0  # X^3 = 0


def test_torus_value():
    assert evaluate(zoo.torus_foam()) == 3


def test_genus_two_vanishes():
    g2 = PreFoam("g2", {0: Facet(genus=2, dots=0, slots=0)}, {})
    assert evaluate(g2) == 0


def test_euler_characteristic_and_degree():
    assert euler_characteristic(sphere(0)) == 2
    assert degree(sphere(0)) == -4
    assert degree(sphere(2)) == 0
    assert degree(zoo.torus_foam()) == 0
    assert degree(zoo.theta_foam(0, 1, 2)) == 0
    assert degree(zoo.t_foam()) == 0


# --- singular circles ---------------------------------------------------------


def test_theta_foam_values():
    assert evaluate(zoo.theta_foam(0, 1, 2)) == 1
    assert evaluate(zoo.theta_foam(1, 2, 0)) == 1
    assert evaluate(zoo.theta_foam(0, 2, 1)) == -1
    assert evaluate(zoo.theta_foam(0, 0, 0)) == 0
    assert evaluate(zoo.theta_foam(1, 1, 1)) == 0
    assert evaluate(zoo.theta_foam(2, 2, 2)) == 0


def test_t_foam_value():
    assert evaluate(zoo.t_foam()) == -2


def test_disjoint_union_multiplies():
    rng = random.Random(14)
    for _ in range(20):
        f1, f2 = random_prefoam(rng), random_prefoam(rng)
        assert evaluate(disjoint_union(f1, f2)) == evaluate(f1) * evaluate(f2)


def test_nonzero_degree_evaluates_to_zero():
    rng = random.Random(15)
    for _ in range(30):
        foam = random_nonzero_degree_prefoam(rng)
        assert evaluate(foam) == 0, foam_to_text(foam)


def test_values_are_rational():
    rng = random.Random(16)
    for _ in range(10):
        assert isinstance(evaluate(random_prefoam(rng)), Fraction)


# --- malformed input ----------------------------------------------------------


def test_open_foam_is_rejected():
    f = PreFoam("open", {0: Facet(genus=0, dots=0, slots=1)}, {})
    with pytest.raises(NotClosed):
        evaluate(f)


def test_check_rejects_bad_structure():
    disk = Facet(genus=0, dots=0, slots=1)
    with pytest.raises(MalformedFoam):  # two legs only
        PreFoam("", {0: disk, 1: disk}, {0: ((0, 0), (1, 0))}).check()
    with pytest.raises(MalformedFoam):  # missing facet
        PreFoam("", {0: disk}, {0: ((0, 0), (1, 0), (2, 0))}).check()
    with pytest.raises(MalformedFoam):  # slot out of range
        PreFoam("", {0: disk, 1: disk, 2: disk},
                {0: ((0, 0), (1, 0), (2, 5))}).check()
    with pytest.raises(MalformedFoam):  # slot used twice
        PreFoam("", {0: Facet(0, 0, 2), 1: disk},
                {0: ((0, 0), (0, 0), (1, 0))}).check()
    with pytest.raises(MalformedFoam):  # negative dots
        PreFoam("", {0: Facet(0, -1, 0)}, {}).check()


# --- text form ----------------------------------------------------------------


def test_round_trip():
    rng = random.Random(17)
    for _ in range(20):
        foam = random_prefoam(rng)
        again = parse_foam(foam_to_text(foam))
        assert again.facets == foam.facets
        assert again.singular == foam.singular


def test_save_and_load(tmp_path):
    p = tmp_path / "t.foam"
    save_foam(p, zoo.t_foam())
    assert evaluate(load_foam(p)) == -2


def test_parse_errors():
    with pytest.raises(ParseError) as err:
        parse_foam("facet 0 genus=0\nwhat 1 2\n")
    assert "line 2" in str(err.value)
    with pytest.raises(ParseError):
        parse_foam("facet 0 genus=0 dots=0 slots=0 extra=1\n")
    with pytest.raises(ParseError):
        parse_foam("singular 0 0:0 1:0 nope\n")
    with pytest.raises(ParseError):  # structural check runs at the end
        parse_foam("facet 0 slots=1\nsingular 0 0:0 0:0 0:0\n")


def test_comments_and_blanks_are_ignored():
    foam = parse_foam("# header\n\nfoam x # trailing\nfacet 0 dots=2\n")
    assert foam.name == "x"
    assert evaluate(foam) == -1
