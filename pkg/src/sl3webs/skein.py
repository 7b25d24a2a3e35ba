"""The q-skein of trivalent webs: circle, bigon and square relations.

A vertexless circle evaluates to [3] = q^2 + 1 + q^-2, a 2-sided face
contracts with factor [2] = q + q^-1, and a 4-sided face is the sum of
its two reconnections.  Repeated application takes any closed web to a
Laurent polynomial (`kuperberg_bracket`) and any web with boundary to a
combination of webs with no circles, bigons or squares
(`reduce_to_nonelliptic`).  The outcome is independent of the order in
which faces are contracted; *which* face is picked first only affects
the work done, and can be overridden through the `_policy` hook to
exercise exactly that independence.
"""

from __future__ import annotations

from . import surgery
from .canonical import sphere_component_key
from .classify import is_non_elliptic
from .errors import BoundaryMismatch, NotClosed, NotNonElliptic, WrongFaceKind
from .laurent import LaurentPoly, quantum_int
from .webs import SignSequence, Web, glue


class SkeinElement:
    """A finite q-linear combination of webs with a common boundary.

    Terms are indexed by the canonical form of the web, so isotopic webs
    merge and a zero coefficient drops its term.
    """

    __slots__ = ("boundary", "terms")

    def __init__(self, boundary, terms=()):
        self.boundary = SignSequence(boundary)
        self.terms = {}
        for web, coeff in terms:
            self._accumulate(web, coeff)

    @staticmethod
    def of(web, coeff=1):
        return SkeinElement(web.signs, [(web, coeff)])

    def _accumulate(self, web, coeff):
        if SignSequence(web.signs) != self.boundary:
            raise BoundaryMismatch(
                f"term boundary {web.signs} differs from {self.boundary}")
        if isinstance(coeff, int):
            coeff = LaurentPoly({0: coeff})
        key = web.canonical_key()
        if key in self.terms:
            old_web, old_coeff = self.terms[key]
            coeff = old_coeff + coeff
            web = old_web
        if coeff:
            self.terms[key] = (web, coeff)
        else:
            self.terms.pop(key, None)

    def items(self):
        """[(web, coefficient)] sorted by canonical key."""
        return [self.terms[k] for k in sorted(self.terms, key=repr)]

    def webs(self):
        return [w for w, _ in self.items()]

    def coefficient_of(self, web):
        entry = self.terms.get(web.canonical_key())
        return entry[1] if entry else LaurentPoly.zero()

    def __add__(self, other):
        if not isinstance(other, SkeinElement):
            return NotImplemented
        if other.boundary != self.boundary:
            raise BoundaryMismatch(
                f"cannot add boundaries {self.boundary} and {other.boundary}")
        out = SkeinElement(self.boundary)
        out.terms = dict(self.terms)
        for web, coeff in other.terms.values():
            out._accumulate(web, coeff)
        return out

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, LaurentPoly)):
            return NotImplemented
        out = SkeinElement(self.boundary)
        for web, coeff in self.terms.values():
            out._accumulate(web, coeff * scalar)
        return out

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SkeinElement):
            return NotImplemented
        return (self.boundary == other.boundary
                and {k: c for k, (_, c) in self.terms.items()}
                == {k: c for k, (_, c) in other.terms.items()})

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        body = ", ".join(f"({c})*{w.name or 'web'}" for w, c in self.items())
        return f"SkeinElement[{self.boundary}: {body or '0'}]"


# --- locating a contractible face ---------------------------------------


def _inner_circle(face):
    """The circle whose inside this face is, if any."""
    for c, io in face.circle_sides:
        if io == 0:
            return c
    return None


def _is_pure(web, face, want_sides):
    try:
        surgery._pure_bounded_orbit(web, face, want_sides)
    except WrongFaceKind:
        return False
    return True


def find_reducible(web):
    """(kind, face index) of the next face to contract, or None.

    Circles come before bigons before squares; ties break to the lowest
    face index.  A face only counts as a bigon or square when nothing
    else is nested inside it.
    """
    faces = web.faces()
    for f in faces:
        if f.bounded and _inner_circle(f) is not None:
            return ("circle", f.index)
    for f in faces:
        if f.bounded and f.sides == 2 and _is_pure(web, f, 2):
            return ("digon", f.index)
    for f in faces:
        if f.bounded and f.sides == 4 and _is_pure(web, f, 4):
            return ("square", f.index)
    return None


def _face_by_index(web, face):
    if hasattr(face, "index"):
        return face
    for f in web.faces():
        if f.index == face:
            return f
    raise WrongFaceKind(f"no face {face!r} in this web")


# --- single contraction steps, as skein elements ------------------------


def reduce_circle(web, face):
    """Remove the circle bounding this face from inside; factor [3]."""
    face = _face_by_index(web, face)
    c = _inner_circle(face)
    if c is None:
        raise WrongFaceKind(f"face {face.index} is not the inside of a circle")
    smaller, coeff = surgery.reduce_circle(web, c)
    return SkeinElement(web.signs, [(smaller, coeff)])


def reduce_digon(web, face):
    """Contract a clean 2-sided face; factor [2]."""
    face = _face_by_index(web, face)
    smaller, coeff = surgery.reduce_digon(web, face)
    return SkeinElement(web.signs, [(smaller, coeff)])


def resolve_square(web, face):
    """Replace a clean 4-sided face by the sum of its two reconnections."""
    face = _face_by_index(web, face)
    wa, wb = surgery.resolve_square(web, face)
    return SkeinElement(web.signs, [(wa, 1), (wb, 1)])


def _contract(web, kind, face_index):
    if kind == "circle":
        return reduce_circle(web, face_index)
    if kind == "digon":
        return reduce_digon(web, face_index)
    if kind == "square":
        return resolve_square(web, face_index)
    raise ValueError(f"unknown contraction kind {kind!r}")


# --- evaluation of closed webs ------------------------------------------
#
# Closed webs factor over connected components (nesting contributes
# nothing), and a single closed component can be evaluated up to sphere
# isotopy, which both shrinks the memo key space and guarantees that any
# 2- or 4-sided face walk is a genuine bigon or square.

_BRACKET_CACHE = {}


def _restrict(web, comp):
    """A closed component as a web of its own."""
    if comp.circle is not None:
        return Web(circles=[comp.circle])
    return Web(
        vertex_sign={v: s for v, s in web.vertex_sign.items() if v in comp.vertices},
        edges={e: ab for e, ab in web.edges.items() if e in comp.edge_ids},
        rotations={v: r for v, r in web.rotations.items() if v in comp.vertices},
    )


def _sphere_cut(web, delete, reverse, dissolve):
    """Contraction surgery with no regard for nesting (sphere mode)."""
    edges = {e: ab for e, ab in web.edges.items() if e not in delete}
    for e in reverse:
        a, b = edges[e]
        edges[e] = (b, a)
    new_edges, fused, cycles = surgery.dissolve_ends(
        edges, {("v", v) for v in dissolve})
    adm = surgery.anchor_dart_map(fused)
    rotations = {v: tuple(adm.get(d, d) for d in r)
                 for v, r in web.rotations.items() if v not in dissolve}
    vertex_sign = {v: s for v, s in web.vertex_sign.items() if v not in dissolve}
    circles = list(web.circles)
    nid = max(circles, default=-1) + 1
    for _ in cycles:
        circles.append(nid)
        nid += 1
    return Web(vertex_sign=vertex_sign, edges=new_edges, rotations=rotations,
               circles=circles)


def _sphere_digon(web, orbit):
    d1, d2 = orbit
    keep, drop = sorted({d1[0], d2[0]})
    return _sphere_cut(web, delete={drop}, reverse={keep},
                       dissolve={web.dart_base(d1)[1], web.dart_base(d2)[1]})


def _sphere_square(web, orbit):
    es = [d[0] for d in orbit]
    vs = {web.dart_base(d)[1] for d in orbit}
    return (_sphere_cut(web, delete={es[0], es[2]}, reverse={es[1], es[3]},
                        dissolve=vs),
            _sphere_cut(web, delete={es[1], es[3]}, reverse={es[0], es[2]},
                        dissolve=vs))


def _sphere_bracket(web, policy, cache):
    """Product of the component values of a closed web, memoised per
    component on its sphere-canonical code."""
    total = LaurentPoly.one()
    for comp in web.components():
        if comp.circle is not None:
            total = total * quantum_int(3)
            continue
        piece = _restrict(web, comp)
        key = sphere_component_key(piece, piece.components()[0])
        hit = cache.get(key)
        if hit is not None:
            total = total * hit
            continue
        orbits = piece.component_orbits(piece.components()[0])
        options = sorted((len(o), min(o), o) for o in orbits if len(o) in (2, 4))
        assert options, "closed component with no 2- or 4-sided face"
        size, _, orbit = policy(options) if policy else options[0]
        if size == 2:
            value = quantum_int(2) * _sphere_bracket(
                _sphere_digon(piece, orbit), policy, cache)
        else:
            wa, wb = _sphere_square(piece, orbit)
            value = (_sphere_bracket(wa, policy, cache)
                     + _sphere_bracket(wb, policy, cache))
        cache[key] = value
        total = total * value
    return total


def kuperberg_bracket(web, _policy=None, _cache=None):
    """Evaluate a closed web to its Laurent polynomial.

    `_policy`, given the sorted list of candidate faces as
    (size, smallest dart, orbit) triples, picks one; `_cache` replaces
    the shared memo (pass a fresh dict to keep runs independent).
    """
    if not web.is_closed:
        raise NotClosed("the bracket is defined for closed webs only")
    cache = _BRACKET_CACHE if _cache is None else _cache
    return _sphere_bracket(web, _policy, cache)


# --- reduction of webs with boundary ------------------------------------

_REDUCE_CACHE = {}


def reduce_to_nonelliptic(web, _cache=None):
    """Expand a web in circle/bigon/square-free webs with the same
    boundary.  Fixed point of `find_reducible`."""
    cache = _REDUCE_CACHE if _cache is None else _cache

    def go(w):
        key = w.canonical_key()
        hit = cache.get(key)
        if hit is not None:
            return hit
        found = find_reducible(w)
        if found is None:
            result = SkeinElement.of(w)
        else:
            step = _contract(w, *found)
            result = SkeinElement(w.signs)
            for smaller, coeff in step.items():
                result = result + go(smaller) * coeff
        cache[key] = result
        return result

    return go(web)


def graded_hom_dim(w1, w2):
    """Graded dimension of the space of morphisms between two
    non-elliptic webs with the same boundary: the bracket of w̄1 glued
    to w2, shifted by the boundary length."""
    if SignSequence(w1.signs) != SignSequence(w2.signs):
        raise BoundaryMismatch(
            f"boundaries {w1.signs} and {w2.signs} do not match")
    for w in (w1, w2):
        if not is_non_elliptic(w):
            raise NotNonElliptic("graded_hom_dim needs non-elliptic inputs")
    return kuperberg_bracket(glue(w1, w2)).shift(len(w1.signs))
