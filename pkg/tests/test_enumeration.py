import itertools
import random

import pytest

from sl3webs.classify import is_non_elliptic, is_superficial
from sl3webs.enumeration import (admissible_sequences, enumerate_non_elliptic,
                                 enumerate_superficial_non_elliptic,
                                 invariant_dim)
from sl3webs.errors import BudgetExceeded
from sl3webs.webs import SignSequence

S = SignSequence.parse


def test_invariant_dim_known_values():
    # multiplicities of the trivial rep, checked against plethysm by hand:
    # V (x) V* = 1 + adjoint, and Inv(adjoint^(x)3) = 2 (the f and d tensors)
    assert invariant_dim(S(".")) == 1
    assert invariant_dim(S("+")) == 0
    assert invariant_dim(S("++")) == 0
    assert invariant_dim(S("+-")) == 1
    assert invariant_dim(S("+++")) == 1
    assert invariant_dim(S("+-+-")) == 2
    assert invariant_dim(S("+-+-+-")) == 6
    assert invariant_dim(S("++++++")) == 5  # one SYT count per (2,2,2) tableau
    assert invariant_dim(S("+++---")) == 6  # sum of squared multiplicities in V(x)3


def test_invariant_dim_is_cyclic_and_reversal_invariant():
    for eps in itertools.product((1, -1), repeat=5):
        base = invariant_dim(SignSequence(eps))
        rolled = invariant_dim(SignSequence(eps[1:] + eps[:1]))
        assert base == rolled
        assert base == invariant_dim(SignSequence(eps).reversed_flipped())


def test_admissible_sequences():
    seqs = admissible_sequences(4)
    assert len(seqs) == 11
    assert seqs[0] == ()
    assert all(sum(s) % 3 == 0 for s in seqs)
    assert [len(s) for s in seqs] == sorted(len(s) for s in seqs)


def test_empty_boundary():
    webs = enumerate_non_elliptic(S("."))
    assert len(webs) == 1
    assert webs[0].is_closed and not webs[0].edges and not webs[0].circles


def test_inadmissible_boundary_is_empty():
    assert enumerate_non_elliptic(S("++")) == []
    assert enumerate_non_elliptic(S("+")) == []


def test_single_arc_and_single_y():
    (arc,) = enumerate_non_elliptic(S("+-"))
    assert len(arc.edges) == 1
    (y,) = enumerate_non_elliptic(S("+++"))
    assert len(y.vertex_sign) == 1


def test_enumeration_matches_invariant_dim():
    for eps in admissible_sequences(6):
        webs = enumerate_non_elliptic(SignSequence(eps))
        assert len(webs) == invariant_dim(eps), f"mismatch at {eps}"


def test_enumerated_webs_are_valid_distinct_non_elliptic():
    for eps in admissible_sequences(5):
        webs = enumerate_non_elliptic(SignSequence(eps))
        keys = set()
        for w in webs:
            assert tuple(w.signs) == tuple(eps)
            assert w.validate() == []
            assert is_non_elliptic(w)
            keys.add(w.canonical_key())
        assert len(keys) == len(webs)


def test_seed_does_not_change_the_result():
    eps = S("+-+-+-")
    base = [w.canonical_key() for w in enumerate_non_elliptic(eps)]
    for seed in (0, 1, 99):
        again = [w.canonical_key()
                 for w in enumerate_non_elliptic(eps, seed=seed)]
        assert again == base


def test_budget_exhaustion_carries_a_partial_list():
    eps = S("+--++--+")
    with pytest.raises(BudgetExceeded) as err:
        enumerate_non_elliptic(eps, vertex_budget=2)
    partial = {w.canonical_key() for w in err.value.partial}
    full = {w.canonical_key() for w in enumerate_non_elliptic(eps)}
    assert partial <= full


def test_superficial_filter():
    eps = S("+-+-+-")
    everything = enumerate_non_elliptic(eps)
    surface = enumerate_superficial_non_elliptic(eps)
    keys = {w.canonical_key() for w in everything}
    for w in surface:
        assert is_superficial(w)
        assert w.canonical_key() in keys
    assert len(surface) == sum(is_superficial(w) for w in everything)


def test_random_boundaries_do_not_crash():
    rng = random.Random(123)
    for _ in range(10):
        n = rng.randint(2, 7)
        eps = SignSequence(rng.choice((1, -1)) for _ in range(n))
        webs = enumerate_non_elliptic(eps)
        assert len(webs) == invariant_dim(eps)
