"""Shared generators for the test suite.

Nothing here is random in the global sense: every function takes an
explicit random.Random so failures reproduce.
"""

import itertools
from fractions import Fraction
from functools import lru_cache

from sl3webs import zoo
from sl3webs.enumeration import enumerate_non_elliptic
from sl3webs.foams import Facet, PreFoam
from sl3webs.webs import SignSequence, disjoint_union, flip_upside_down, glue


def admissible_signs(min_len, max_len):
    """All sign tuples with min_len <= length <= max_len and sum 0 mod 3."""
    out = []
    for n in range(min_len, max_len + 1):
        for eps in itertools.product((1, -1), repeat=n):
            if sum(eps) % 3 == 0:
                out.append(eps)
    return out


@lru_cache(maxsize=None)
def webs_for(eps):
    return tuple(enumerate_non_elliptic(SignSequence(eps)))


def random_open_web(rng, max_len=5):
    eps = rng.choice(admissible_signs(2, max_len))
    return rng.choice(webs_for(eps))


def random_closed_web(rng, max_len=5):
    """A closed web with circles, bigons and squares: two random
    non-elliptic webs glued, sometimes with a closed web nested into a
    face or placed alongside."""
    eps = rng.choice(admissible_signs(2, max_len))
    pool = webs_for(eps)
    w = glue(rng.choice(pool), rng.choice(pool))
    if rng.random() < 0.35:
        guest = rng.choice((zoo.circle_web(), zoo.theta_web()))
        bounded = [f.index for f in w.faces() if f.bounded]
        if bounded:
            w = disjoint_union(w, guest, nest_into=rng.choice(bounded))
    if rng.random() < 0.2:
        w = disjoint_union(w, rng.choice((zoo.circle_web(), zoo.theta_web())))
    return w


def random_nonelliptic_pair(rng, max_len=6):
    eps = rng.choice(admissible_signs(2, max_len))
    pool = webs_for(eps)
    return rng.choice(pool), rng.choice(pool)


def sneni_corpus(max_len=4):
    """Superficial semi-non-elliptic webs, each containing a square: a
    square ladder placed alongside square-free superficial webs."""
    squares = [zoo.square_web(), flip_upside_down(zoo.square_web())]
    out = list(squares)
    out.append(disjoint_union(squares[0], squares[1]))
    for eps in admissible_signs(2, max_len):
        for u in webs_for(eps):
            if u.vertex_sign or len(out) % 2:  # skew the mix a little
                out.append(disjoint_union(squares[0], u))
            else:
                out.append(disjoint_union(u, squares[1]))
    return out


def random_prefoam(rng):
    """A random closed pre-foam (arbitrary genus/dots, consistent legs)."""
    facets = {}
    singular = {}
    n_circles = rng.randint(0, 3)
    need = 3 * n_circles
    supply = []
    fid = 0
    while need > 0:
        k = rng.randint(1, min(3, need))
        facets[fid] = Facet(genus=rng.randint(0, 2), dots=rng.randint(0, 3),
                            slots=k)
        supply.extend((fid, s) for s in range(k))
        fid += 1
        need -= k
    rng.shuffle(supply)
    for c in range(n_circles):
        singular[c] = tuple(supply[3 * c:3 * c + 3])
    for _ in range(rng.randint(0 if facets else 1, 2)):
        facets[fid] = Facet(genus=rng.randint(0, 2), dots=rng.randint(0, 3),
                            slots=0)
        fid += 1
    return PreFoam("", facets, singular)


def random_nonzero_degree_prefoam(rng):
    from sl3webs.foams import degree

    while True:
        foam = random_prefoam(rng)
        if degree(foam) != 0:
            return foam


def frob_fraction(rng):
    return Fraction(rng.randint(-6, 6), rng.randint(1, 4))
