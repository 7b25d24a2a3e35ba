"""Exhaustive generation of non-elliptic webs with a given boundary.

The search peels the leftmost pending half-edge of the active region:
it either connects to another pending half-edge of opposite direction
(splitting the region in two) or grows a new trivalent vertex.  Partial
faces are tracked as the gaps between pending half-edges, so a face is
checked the moment it closes, and a discrete Gauss-Bonnet inequality
prunes regions that can no longer be filled with faces of six or more
sides: for a region with m pending half-edges and gaps g_i, any
completion satisfies

    sum over final frontier faces of (6 - added sides) = 6 + 2m + excess

with excess >= 0, and the left side is at most
sum(min(g_i, 6)) + 6 * (number of boundary-touching gaps); regions
violating that are dead.  The per-region flow condition (direction sum
divisible by 3) prunes the rest.

`invariant_dim` independently counts the webs that should exist, by
running the sl3 branching rule on dominant weights; the two share no
machinery and are checked against each other in the tests.
"""

from __future__ import annotations

import itertools
import random

from .errors import BudgetExceeded
from .webs import SignSequence, Web
from .classify import is_non_elliptic, is_superficial


def invariant_dim(eps):
    """Multiplicity of the trivial weight in V^{e_0} x V^{e_1} x ...,
    where V^+ is the vector representation of sl3 and V^- its dual."""
    eps = SignSequence(eps)
    dist = {(0, 0): 1}
    for s in eps:
        nxt = {}
        for (p, q), mult in dist.items():
            if s == 1:
                steps = ((p + 1, q), (p - 1, q + 1), (p, q - 1))
            else:
                steps = ((p, q + 1), (p + 1, q - 1), (p - 1, q))
            for w in steps:
                if w[0] >= 0 and w[1] >= 0:
                    nxt[w] = nxt.get(w, 0) + mult
        dist = nxt
    return dist.get((0, 0), 0)


def admissible_sequences(max_len):
    """All sign sequences of length <= max_len whose sum is divisible
    by 3 (the ones that bound webs), shortest first."""
    out = []
    for n in range(max_len + 1):
        for signs in itertools.product((1, -1), repeat=n):
            if sum(signs) % 3 == 0:
                out.append(SignSequence(signs))
    return out


# --- the search -----------------------------------------------------------
#
# A stub is (token, base end, direction); direction +1 means the base is
# the tail of the pending edge, matching the boundary sign convention.
# A region is (stubs, gaps) with gap[i] = (sides so far, touches boundary)
# sitting between stub[i] and stub[i+1] (the last gap wraps around).


class _Search:
    def __init__(self, eps, budget, rng):
        self.eps = eps
        self.budget = budget
        self.rng = rng
        self.edges = {}
        self.vertex_sign = {}
        self.rot_template = {}  # v -> (first edge id, tau_next, tau_last)
        self.bind = {}  # token -> edge id
        self.n_edges = 0
        self.n_vertices = 0
        self.n_tokens = 0
        self.found = {}
        self.truncated = False

    def fresh_token(self):
        self.n_tokens += 1
        return self.n_tokens - 1

    @staticmethod
    def region_ok(stubs, gaps):
        if sum(d for _, _, d in stubs) % 3 != 0:
            return False
        supply = sum(6 if exempt else min(size, 6) for size, exempt in gaps)
        return supply >= 6 + 2 * len(stubs)

    def run(self):
        stubs = [(self.fresh_token(), ("b", k), s) for k, s in enumerate(self.eps)]
        gaps = [(0, True)] * len(stubs)
        if not stubs:
            self.emit()
            return
        if self.region_ok(stubs, gaps):
            self.go([(stubs, gaps)])

    def emit(self):
        rotations = {}
        for v, (e0, tau_a, tau_b) in self.rot_template.items():
            side = 1 if self.vertex_sign[v] == -1 else 0
            rotations[v] = ((e0, side), (self.bind[tau_a], side),
                            (self.bind[tau_b], side))
        web = Web(signs=self.eps, vertex_sign=dict(self.vertex_sign),
                  edges=dict(self.edges), rotations=rotations)
        key = web.canonical_key()
        if key not in self.found:
            web.require_valid()
            assert is_non_elliptic(web)
            self.found[key] = web

    def go(self, regions):
        if not regions:
            self.emit()
            return
        (stubs, gaps), rest = regions[0], regions[1:]
        tok0, base0, d0 = stubs[0]
        m = len(stubs)
        moves = [("connect", k) for k in range(1, m) if stubs[k][2] == -d0]
        moves.append(("expand", None))
        if self.rng is not None:
            self.rng.shuffle(moves)
        for move, k in moves:
            if move == "connect":
                self.try_connect(stubs, gaps, k, rest)
            else:
                self.try_expand(stubs, gaps, rest)

    def new_edge(self, tail, head):
        e = self.n_edges
        self.n_edges += 1
        self.edges[e] = (tail, head)
        return e

    def drop_edge(self, e):
        del self.edges[e]
        self.n_edges -= 1

    def try_connect(self, stubs, gaps, k, rest):
        tok0, base0, d0 = stubs[0]
        tokk, basek, _ = stubs[k]
        m = len(stubs)
        new_regions = []
        # side A: stubs strictly between 0 and k
        if k == 1:
            size, exempt = gaps[0]
            if not exempt and size + 1 < 6:
                return
        else:
            sa = stubs[1:k]
            ga = gaps[1:k - 1] + [(gaps[k - 1][0] + gaps[0][0] + 1,
                                   gaps[k - 1][1] or gaps[0][1])]
            if not self.region_ok(sa, ga):
                return
            new_regions.append((sa, ga))
        # side B: stubs strictly between k and 0 (wrapping)
        if k == m - 1:
            size, exempt = gaps[m - 1]
            if not exempt and size + 1 < 6:
                return
        else:
            sb = stubs[k + 1:]
            gb = gaps[k + 1:m - 1] + [(gaps[m - 1][0] + gaps[k][0] + 1,
                                       gaps[m - 1][1] or gaps[k][1])]
            if not self.region_ok(sb, gb):
                return
            new_regions.append((sb, gb))
        e = self.new_edge(*((base0, basek) if d0 == 1 else (basek, base0)))
        self.bind[tok0] = e
        self.bind[tokk] = e
        self.go(new_regions + rest)
        del self.bind[tok0]
        del self.bind[tokk]
        self.drop_edge(e)

    def try_expand(self, stubs, gaps, rest):
        if self.n_vertices >= self.budget:
            self.truncated = True
            return
        tok0, base0, d0 = stubs[0]
        m = len(stubs)
        v = self.n_vertices
        vend = ("v", v)
        t1, t2 = self.fresh_token(), self.fresh_token()
        ns = [(t1, vend, -d0), (t2, vend, -d0)] + stubs[1:]
        ng = ([(0, False), (gaps[0][0] + 1, gaps[0][1])] + gaps[1:m - 1]
              + [(gaps[m - 1][0] + 1, gaps[m - 1][1])])
        if not self.region_ok(ns, ng):
            self.n_tokens -= 2
            return
        self.n_vertices += 1
        self.vertex_sign[v] = -d0
        e0 = self.new_edge(*((base0, vend) if d0 == 1 else (vend, base0)))
        self.bind[tok0] = e0
        # counterclockwise at v: the incoming edge, then the stub next to
        # the old right neighbour (t2), then the one next to the left (t1)
        self.rot_template[v] = (e0, t2, t1)
        self.go([(ns, ng)] + rest)
        del self.rot_template[v]
        del self.bind[tok0]
        self.drop_edge(e0)
        del self.vertex_sign[v]
        self.n_vertices -= 1
        self.n_tokens -= 2


def enumerate_non_elliptic(eps, vertex_budget=None, seed=None):
    """All non-elliptic webs with boundary eps and at most vertex_budget
    vertices (default 2*len(eps)**2), sorted by canonical form.

    Raises BudgetExceeded, carrying the partial list, if some branch of
    the search was still extendable when it hit the budget — in that
    case the list may be incomplete.  A normal return is a complete
    enumeration (for every vertex count, not just below the budget).
    """
    eps = SignSequence(eps)
    if vertex_budget is None:
        vertex_budget = 2 * len(eps) ** 2
    rng = random.Random(seed) if seed is not None else None
    search = _Search(eps, vertex_budget, rng)
    search.run()
    webs = [search.found[k] for k in sorted(search.found, key=repr)]
    if search.truncated:
        raise BudgetExceeded(
            f"search hit the {vertex_budget}-vertex budget and may be incomplete",
            partial=webs)
    return webs


def enumerate_superficial_non_elliptic(eps, vertex_budget=None, seed=None):
    """The superficial members of `enumerate_non_elliptic`."""
    try:
        webs = enumerate_non_elliptic(eps, vertex_budget, seed)
    except BudgetExceeded as exc:
        raise BudgetExceeded(exc.message,
                             partial=[w for w in exc.partial
                                      if is_superficial(w)]) from None
    return [w for w in webs if is_superficial(w)]
