"""Bracket evaluation and elliptic-face reduction.

The heavyweight golden values (the two glued example webs) live in
test_acceptance.py; here we cover the local relations, the policy
independence of the rewriting, and the shape of reductions.
"""

import random

import pytest

from helpers import random_closed_web, random_nonelliptic_pair, sneni_corpus
from sl3webs import zoo
from sl3webs.classify import is_non_elliptic, is_superficial
from sl3webs.errors import BoundaryMismatch, NotClosed, NotNonElliptic
from sl3webs.laurent import LaurentPoly, parse_poly, quantum_int
from sl3webs.skein import (SkeinElement, find_reducible, graded_hom_dim,
                           kuperberg_bracket, reduce_to_nonelliptic,
                           resolve_square)
from sl3webs.webs import Web, disjoint_union, glue


def test_circle_is_quantum_three():
    assert kuperberg_bracket(zoo.circle_web()) == quantum_int(3)


def test_theta_is_two_times_three():
    assert kuperberg_bracket(zoo.theta_web()) == quantum_int(2) * quantum_int(3)


def test_empty_web_is_one():
    assert kuperberg_bracket(Web()) == LaurentPoly.one()


def test_bracket_needs_a_closed_web():
    with pytest.raises(NotClosed):
        kuperberg_bracket(zoo.arc())


def test_bracket_is_multiplicative():
    th, c = zoo.theta_web(), zoo.circle_web()
    both = disjoint_union(th, c)
    assert kuperberg_bracket(both) == (kuperberg_bracket(th)
                                       * kuperberg_bracket(c))


def test_nesting_does_not_change_the_bracket():
    th = zoo.theta_web()
    inner = next(f.index for f in th.faces() if f.bounded)
    nested = disjoint_union(th, zoo.circle_web(), nest_into=inner)
    beside = disjoint_union(th, zoo.circle_web())
    assert kuperberg_bracket(nested) == kuperberg_bracket(beside)


def test_drum_value():
    # deleting the six spokes by hand: the drum expands into nested/split
    # circle pairs; the polynomial was worked out once on paper
    want = parse_poly("q^6 + 7*q^4 + 17*q^2 + 22 + 17*q^-2 + 7*q^-4 + q^-6")
    assert kuperberg_bracket(zoo.drum()) == want


def test_square_resolution_sums():
    d = zoo.drum()
    kind, face = find_reducible(d)
    assert kind == "square"
    parts = resolve_square(d, face)
    assert len(parts) == 2
    total = LaurentPoly.zero()
    for w, coeff in parts.items():
        assert coeff == LaurentPoly.one()
        total = total + kuperberg_bracket(w, _cache={})
    assert total == kuperberg_bracket(d, _cache={})


def test_find_reducible_prefers_circles_then_digons():
    th = zoo.theta_web()
    inner = next(f.index for f in th.faces() if f.bounded)
    nested = disjoint_union(th, zoo.circle_web(), nest_into=inner)
    kind, _ = find_reducible(nested)
    assert kind == "circle"
    kind, _ = find_reducible(th)
    assert kind == "digon"
    assert find_reducible(zoo.kk_w()) is None
    assert find_reducible(zoo.arc()) is None


def test_policy_independence_small():
    # a trimmed-down version of the acceptance property: five seeded
    # policies must agree with the default on a mixed bag of closed webs
    rng = random.Random(20260814)
    webs = [random_closed_web(rng) for _ in range(30)]
    baseline = [kuperberg_bracket(w, _cache={}) for w in webs]
    for pseed in range(5):
        prng = random.Random(pseed)
        values = [kuperberg_bracket(w, _policy=prng.choice, _cache={})
                  for w in webs]
        assert values == baseline


def test_bracket_values_are_symmetric_and_nonnegative():
    rng = random.Random(5)
    for _ in range(40):
        value = kuperberg_bracket(random_closed_web(rng))
        assert value.is_symmetric()
        assert value.is_nonnegative()
        assert value  # a closed web never evaluates to zero


def test_transpose_pairing():
    rng = random.Random(6)
    for _ in range(20):
        w1, w2 = random_nonelliptic_pair(rng)
        assert (kuperberg_bracket(glue(w1, w2))
                == kuperberg_bracket(glue(w2, w1)))


def test_hom_dim_of_an_arc_with_itself():
    value = graded_hom_dim(zoo.arc(), zoo.arc())
    assert value == parse_poly("q^4 + q^2 + 1")


def test_hom_dim_of_y_with_itself():
    value = graded_hom_dim(zoo.y_web(), zoo.y_web())
    assert value == parse_poly("q^6 + 2*q^4 + 2*q^2 + 1")


def test_hom_dim_rejects_bad_inputs():
    with pytest.raises(BoundaryMismatch):
        graded_hom_dim(zoo.arc(), zoo.y_web())
    with pytest.raises(NotNonElliptic):
        graded_hom_dim(zoo.square_web(), zoo.square_web())


def test_reduce_fixed_point_and_boundary():
    rng = random.Random(9)
    for _ in range(15):
        w1, _ = random_nonelliptic_pair(rng, max_len=5)
        messy = disjoint_union(w1, zoo.theta_web())
        elem = reduce_to_nonelliptic(messy, _cache={})
        assert elem.boundary == tuple(w1.signs)
        for term, _ in elem.items():
            assert is_non_elliptic(term)
            assert find_reducible(term) is None


def test_reduce_of_nonelliptic_web_is_itself():
    w = zoo.kk_w()
    elem = reduce_to_nonelliptic(w)
    assert elem == SkeinElement.of(w)


def test_reduce_respects_the_pairing():
    # <reduce(w), u> must equal <w, u> term by term
    rng = random.Random(10)
    for _ in range(10):
        u, v = random_nonelliptic_pair(rng, max_len=5)
        messy = disjoint_union(u, zoo.theta_web())
        bounded = [f.index for f in messy.faces() if f.bounded]
        if bounded and rng.random() < 0.5:
            messy = disjoint_union(messy, zoo.circle_web(),
                                   nest_into=rng.choice(bounded))
        elem = reduce_to_nonelliptic(messy, _cache={})
        lhs = kuperberg_bracket(glue(messy, v))
        rhs = LaurentPoly.zero()
        for term, coeff in elem.items():
            rhs = rhs + coeff * kuperberg_bracket(glue(term, v))
        assert lhs == rhs


def test_reduce_of_side_theta_factors_out():
    u = zoo.y_web()
    elem = reduce_to_nonelliptic(disjoint_union(u, zoo.theta_web()), _cache={})
    assert len(elem) == 1
    assert elem.coefficient_of(u) == quantum_int(2) * quantum_int(3)


def test_sneni_reduction_shape():
    # every superficial semi-non-elliptic web expands with constant
    # positive integer coefficients over superficial non-elliptic webs
    # on fewer vertices
    for w in sneni_corpus(max_len=4):
        elem = reduce_to_nonelliptic(w)
        assert elem
        for term, coeff in elem.items():
            assert coeff.degree() == 0 and coeff.coefficient(0) > 0
            assert len(term.vertex_sign) < len(w.vertex_sign)
            assert is_non_elliptic(term)
            assert is_superficial(term)


def test_semi_superficial_reduction_shape():
    # with one nested hexagon next to the square the coefficients may
    # pick up a q + q^-1 but stay symmetric, nonnegative, degree <= 1
    w = zoo.flower(squared_petals=(0,))
    elem = reduce_to_nonelliptic(w)
    assert elem
    for _, coeff in elem.items():
        assert coeff.is_symmetric()
        assert coeff.is_nonnegative()
        assert coeff.degree() <= 1


def test_skein_element_algebra():
    a = SkeinElement.of(zoo.arc())
    b = SkeinElement.of(zoo.arc(), quantum_int(2))
    assert (a + b).coefficient_of(zoo.arc()) == quantum_int(2) + 1
    assert (a * 0) == SkeinElement(zoo.arc().signs)
    assert not (a * 0)
    with pytest.raises(BoundaryMismatch):
        a + SkeinElement.of(zoo.y_web())
    with pytest.raises(BoundaryMismatch):
        SkeinElement((1, -1), [(zoo.y_web(), 1)])
