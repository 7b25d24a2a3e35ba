"""Planar trivalent webs with oriented edges (sl3 webs).

A web lives in the upper half plane above a horizontal boundary line with
marked points b0 < b1 < ... < b{n-1}.  Data:

  * every interior vertex is trivalent and is either a *source* (all three
    edges point away from it) or a *sink* (all three point into it);
  * every boundary point meets exactly one edge end; its sign is '+' when
    the edge leaves the line there (the point is the edge's tail) and '-'
    when the edge arrives;
  * each vertex carries the counterclockwise cyclic order of its three
    incident edges (the rotation), which pins down the embedding up to
    isotopy of the sphere;
  * vertexless circles are allowed and carry no orientation;
  * a containment forest records which closed component sits inside which
    face of which other component, which pins down the plane embedding.

Darts.  Every edge has two darts (e, 0) and (e, 1): side 0 is based at the
tail, side 1 at the head.  Faces of a component are the orbits of the walk
d -> sigma(alpha(d)) where alpha swaps the two darts of an edge and sigma
is the counterclockwise rotation at the base of a dart (boundary points
act as fixed points of sigma).  The orbit of a dart is the face on the
*right* of the edge walked from the dart's base to its far end.  Plane
faces are unions of such orbits glued according to the containment forest.

Text format (one web per file, '#' starts a comment):

    web flower            # optional name
    boundary +--+         # omitted for closed webs
    vertex v0 sink
    vertex v1 source
    edge e0 v1 v0         # tail endpoint, then head endpoint; b3 = boundary
    rot v0 e0 e2 e4       # counterclockwise around v0
    circle c0
    nest c0 in v0 1       # c0 sits in local face 1 of the component rooted
                          # at v0 (faces sorted by smallest incident dart)
    outer v0 2            # closed component rooted at v0 shows face 2 to
                          # its surroundings (defaults to face 0)

Component roots are 'v<k>' with k the smallest vertex id of the component,
or 'c<k>' for a circle.  Local face indices are positions in the list of
the component's own faces sorted by their smallest dart (side 0 before
side 1); a circle's inside is face 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BOUNDARY_SIGN_MISMATCH,
    MALFORMED_CONTAINMENT,
    MIXED_VERTEX_ORIENTATION,
    NON_TRIVALENT,
    NONPLANAR,
    BoundaryMismatch,
    InvalidWeb,
    NotClosed,
    ParseError,
    WrongFaceKind,
)

UNBOUNDED = ("U",)


class SignSequence(tuple):
    """Sequence of +1/-1 boundary signs."""

    @staticmethod
    def parse(text):
        """Parse '+--+' (or '' / '.' for the empty sequence)."""
        text = text.strip()
        if text in ("", "."):
            return SignSequence(())
        if not set(text) <= {"+", "-"}:
            raise ParseError(f"bad sign string {text!r}")
        return SignSequence(1 if ch == "+" else -1 for ch in text)

    def __str__(self):
        return "".join("+" if s > 0 else "-" for s in self) or "."

    def is_admissible(self):
        """True iff some web has this boundary: the signed sum is 0 mod 3."""
        return sum(self) % 3 == 0

    def reversed_flipped(self):
        """The boundary of the mirror web."""
        return SignSequence(-s for s in reversed(self))


@dataclass(frozen=True)
class Component:
    """One connected piece of a web (a circle, or an edge-connected part)."""

    root: tuple  # ('c', circle_id) or ('v', min vertex id) or ('e', min edge id)
    vertices: frozenset
    edge_ids: frozenset
    tips: tuple  # sorted boundary indices met by this component
    circle: object  # circle id, or None

    @property
    def is_closed(self):
        return not self.tips


@dataclass
class Face:
    """A face of the plane complement of the web."""

    index: int
    bounded: bool
    sides: int
    edge_sides: tuple  # darts (edge, side) on the boundary walk
    circle_sides: tuple  # (circle_id, 0|1) tokens on the boundary walk

    @property
    def edges(self):
        return frozenset(e for e, _ in self.edge_sides)

    @property
    def adjacency_keys(self):
        """Hashable keys for 'shares a side': edges, and circles as edges."""
        return self.edges | frozenset(("c", c) for c, _ in self.circle_sides)


class Web:
    """See the module docstring.  Instances are treated as immutable."""

    __slots__ = ("signs", "vertex_sign", "edges", "rotations", "circles",
                 "containment", "outer", "name", "_cache")

    def __init__(self, signs=(), vertex_sign=None, edges=None, rotations=None,
                 circles=(), containment=None, outer=None, name=""):
        self.signs = SignSequence(signs)
        self.vertex_sign = dict(vertex_sign or {})
        self.edges = {e: (tuple(a), tuple(b)) for e, (a, b) in (edges or {}).items()}
        self.rotations = {v: tuple(tuple(d) for d in r)
                          for v, r in (rotations or {}).items()}
        self.circles = tuple(sorted(circles))
        self.containment = dict(containment or {})
        self.outer = dict(outer or {})
        self.name = name
        self._cache = {}

    # -- basic queries ------------------------------------------------------

    @property
    def n_boundary(self):
        return len(self.signs)

    @property
    def is_closed(self):
        return not self.signs

    def dart_base(self, dart):
        e, s = dart
        return self.edges[e][s]

    def darts(self):
        for e in self.edges:
            yield (e, 0)
            yield (e, 1)

    def _sigma(self):
        """sigma: dart -> next dart counterclockwise around its base."""
        if "sigma" in self._cache:
            return self._cache["sigma"]
        sig = {}
        for rot in self.rotations.values():
            for i, d in enumerate(rot):
                sig[d] = rot[(i + 1) % len(rot)]
        for d in self.darts():
            if self.dart_base(d)[0] == "b":
                sig[d] = d
        self._cache["sigma"] = sig
        return sig

    # -- components ---------------------------------------------------------

    def components(self):
        """Connected components, circles included, sorted by root."""
        if "components" in self._cache:
            return self._cache["components"]
        parent = {}

        def find(x):
            while parent.setdefault(x, x) != x:
                parent[x] = parent.setdefault(parent[x], parent[x])
                x = parent[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry

        by_vertex = {}
        for e, (a, b) in self.edges.items():
            find(e)
            for end in (a, b):
                if end[0] == "v":
                    by_vertex.setdefault(end[1], []).append(e)
        for es in by_vertex.values():
            for e in es[1:]:
                union(es[0], e)
        groups = {}
        for e in self.edges:
            groups.setdefault(find(e), []).append(e)
        comps = []
        for es in groups.values():
            vs = set()
            tips = []
            for e in es:
                for end in self.edges[e]:
                    if end[0] == "v":
                        vs.add(end[1])
                    else:
                        tips.append(end[1])
            root = ("v", min(vs)) if vs else ("e", min(es))
            comps.append(Component(root=root, vertices=frozenset(vs),
                                   edge_ids=frozenset(es), tips=tuple(sorted(tips)),
                                   circle=None))
        for c in self.circles:
            comps.append(Component(root=("c", c), vertices=frozenset(),
                                   edge_ids=frozenset(), tips=(), circle=c))
        comps.sort(key=lambda c: c.root)
        self._cache["components"] = comps
        return comps

    def component_of_root(self, root):
        for c in self.components():
            if c.root == root:
                return c
        raise KeyError(root)

    def component_orbits(self, comp):
        """Orbits of the face walk on the component's darts, i.e. its faces,
        each a dart tuple in walk order, sorted by smallest dart.  Circles
        have no darts; callers use their two side tokens instead."""
        key = ("orbits", comp.root)
        if key in self._cache:
            return self._cache[key]
        sig = self._sigma()
        seen = set()
        orbits = []
        for e in sorted(comp.edge_ids):
            for s in (0, 1):
                d0 = (e, s)
                if d0 in seen:
                    continue
                orbit = []
                d = d0
                while d not in seen:
                    seen.add(d)
                    orbit.append(d)
                    d = sig[(d[0], 1 - d[1])]
                orbits.append(tuple(orbit))
        orbits.sort(key=min)
        self._cache[key] = orbits
        return orbits

    def local_face_keys(self, comp):
        """Face keys (smallest dart of each orbit) in local-face-index order."""
        if comp.circle is not None:
            return ["in", "out"]
        return [min(o) for o in self.component_orbits(comp)]

    def outer_key_of(self, comp):
        """The face key of the component's face that faces its surroundings."""
        if comp.circle is not None:
            return "out"
        if comp.tips:
            for o in self.component_orbits(comp):
                if any(self.dart_base(d)[0] == "b" for d in o):
                    return min(o)
            raise AssertionError("boundary component with no tip face")
        key = self.outer.get(comp.root)
        if key is None:
            key = self.local_face_keys(comp)[0]
        return key

    # -- validation ---------------------------------------------------------

    def validate(self):
        """Return a list of problem strings; empty means the web is valid."""
        problems = []
        for e, (a, b) in self.edges.items():
            for end in (a, b):
                if end[0] == "v" and end[1] not in self.vertex_sign:
                    problems.append(f"{NON_TRIVALENT}: edge e{e} ends at unknown vertex v{end[1]}")
                elif end[0] == "b" and not (0 <= end[1] < self.n_boundary):
                    problems.append(f"{BOUNDARY_SIGN_MISMATCH}: edge e{e} ends at unknown boundary point b{end[1]}")
        if problems:
            return problems

        incident = {v: [] for v in self.vertex_sign}
        at_boundary = {}
        for e, (a, b) in self.edges.items():
            for side, end in enumerate((a, b)):
                if end[0] == "v":
                    incident[end[1]].append((e, side))
                else:
                    at_boundary.setdefault(end[1], []).append((e, side))

        for v, darts in sorted(incident.items()):
            if len(darts) != 3:
                problems.append(f"{NON_TRIVALENT}: vertex v{v} has {len(darts)} incident edge ends")
                continue
            rot = self.rotations.get(v)
            if rot is None or len(rot) != 3 or set(rot) != set(darts):
                problems.append(f"{NON_TRIVALENT}: rotation of v{v} does not list its incident edge ends")
        if problems:
            return problems

        for v, darts in sorted(incident.items()):
            want = 0 if self.vertex_sign[v] > 0 else 1  # a source has tail sides only
            if any(s != want for _, s in darts):
                kind = "source" if want == 0 else "sink"
                problems.append(f"{MIXED_VERTEX_ORIENTATION}: v{v} is a {kind} but has both in- and out-edges")

        for k in range(self.n_boundary):
            ends = at_boundary.get(k, [])
            if len(ends) != 1:
                problems.append(f"{BOUNDARY_SIGN_MISMATCH}: boundary point b{k} meets {len(ends)} edge ends")
                continue
            (e, side), = ends
            want = 0 if self.signs[k] > 0 else 1  # '+': the point is a tail
            if side != want:
                arrow = "leave" if want == 0 else "enter"
                problems.append(f"{BOUNDARY_SIGN_MISMATCH}: the edge at b{k} should {arrow} the boundary there")
        if problems:
            return problems

        problems.extend(self._validate_planarity())
        if problems:
            return problems
        return self._validate_containment()

    def _validate_planarity(self):
        problems = []
        comp_at_tip = {}
        for comp in self.components():
            if comp.circle is not None:
                continue
            nv = len(comp.vertices) + len(comp.tips)
            ne = len(comp.edge_ids)
            orbits = self.component_orbits(comp)
            if nv - ne + len(orbits) != 2:
                problems.append(f"{NONPLANAR}: component {comp.root} fails the genus-0 face count")
                continue
            if comp.tips:
                outer = [o for o in orbits
                         if any(self.dart_base(d)[0] == "b" for d in o)]
                tip_walk = []
                for o in outer:
                    for d in o:
                        base = self.dart_base(d)
                        if base[0] == "b":
                            tip_walk.append(base[1])
                if len(outer) != 1 or sorted(tip_walk) != list(comp.tips):
                    problems.append(f"{NONPLANAR}: boundary points of component {comp.root} do not share one face")
                    continue
                lo = tip_walk.index(min(tip_walk))
                cyc = tip_walk[lo:] + tip_walk[:lo]
                if cyc != sorted(tip_walk):
                    problems.append(f"{NONPLANAR}: component {comp.root} meets the boundary out of order")
            for k in comp.tips:
                comp_at_tip[k] = comp.root
        if problems:
            return problems
        # components may not interleave along the boundary line
        remaining = {}
        for k in range(self.n_boundary):
            remaining[comp_at_tip[k]] = remaining.get(comp_at_tip[k], 0) + 1
        stack = []
        for k in range(self.n_boundary):
            c = comp_at_tip[k]
            if not stack or stack[-1] != c:
                if c in stack:
                    problems.append(f"{NONPLANAR}: components {stack[-1]} and {c} interleave along the boundary")
                    return problems
                stack.append(c)
            remaining[c] -= 1
            if not remaining[c]:
                if stack[-1] != c:
                    problems.append(f"{NONPLANAR}: components interleave along the boundary near b{k}")
                    return problems
                stack.pop()
        return problems

    def _validate_containment(self):
        problems = []
        comps = {c.root: c for c in self.components()}
        for root, key in self.outer.items():
            comp = comps.get(root)
            if comp is None or not comp.is_closed or comp.circle is not None:
                problems.append(f"{MALFORMED_CONTAINMENT}: outer face declared for non-closed component {root}")
            elif key not in self.local_face_keys(comp):
                problems.append(f"{MALFORMED_CONTAINMENT}: outer face of {root} is not a face of it")
        for child, parent in self.containment.items():
            comp = comps.get(child)
            if comp is None:
                problems.append(f"{MALFORMED_CONTAINMENT}: nest entry for unknown component {child}")
                continue
            if not comp.is_closed:
                problems.append(f"{MALFORMED_CONTAINMENT}: component {child} touches the boundary and cannot be nested")
                continue
            if parent is None:
                continue
            proot, pface = parent
            pcomp = comps.get(proot)
            if pcomp is None:
                problems.append(f"{MALFORMED_CONTAINMENT}: {child} nested in unknown component {proot}")
                continue
            if proot == child:
                problems.append(f"{MALFORMED_CONTAINMENT}: {child} nested in itself")
                continue
            if pface not in self.local_face_keys(pcomp):
                problems.append(f"{MALFORMED_CONTAINMENT}: {child} nested in missing face {pface} of {proot}")
                continue
            if pface == self.outer_key_of(pcomp):
                problems.append(f"{MALFORMED_CONTAINMENT}: {child} nested in the outer face of {proot}")
        if problems:
            return problems
        for start in self.containment:
            seen = set()
            cur = start
            while cur is not None:
                if cur in seen:
                    problems.append(f"{MALFORMED_CONTAINMENT}: containment cycle through {start}")
                    return problems
                seen.add(cur)
                nxt = self.containment.get(cur)
                cur = None if nxt is None else nxt[0]
        return problems

    def require_valid(self):
        problems = self.validate()
        if problems:
            raise InvalidWeb(problems)
        return self

    # -- plane faces ----------------------------------------------------------

    def face_classes(self):
        """Union-find over face tokens, one class per plane face.

        Tokens are ('o', comp_root, orbit_key) for vertexed components,
        ('co', circle_id, 0|1) for circle sides (0 = inside), and UNBOUNDED.
        Returns (token -> representative, unbounded representative).
        """
        if "face_classes" in self._cache:
            return self._cache["face_classes"]
        parent = {UNBOUNDED: UNBOUNDED}

        def find(x):
            while parent.setdefault(x, x) != x:
                parent[x] = parent.setdefault(parent[x], parent[x])
                x = parent[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry

        def token(comp, key):
            if comp.circle is not None:
                return ("co", comp.circle, 0 if key == "in" else 1)
            return ("o", comp.root, key)

        comps = self.components()
        for comp in comps:
            for key in self.local_face_keys(comp):
                find(token(comp, key))
        by_root = {c.root: c for c in comps}
        for comp in comps:
            outer_tok = token(comp, self.outer_key_of(comp))
            if comp.tips:
                union(outer_tok, UNBOUNDED)
            else:
                slot = self.containment.get(comp.root)
                if slot is None:
                    union(outer_tok, UNBOUNDED)
                else:
                    union(outer_tok, token(by_root[slot[0]], slot[1]))
        classes = {t: find(t) for t in list(parent)}
        self._cache["face_classes"] = (classes, find(UNBOUNDED))
        return self._cache["face_classes"]

    def faces(self):
        """The plane faces, sorted by smallest incident dart (circle-only
        regions last, by circle id).  The unbounded face is included."""
        if "faces" in self._cache:
            return self._cache["faces"]
        classes, unb = self.face_classes()
        groups = {}
        for comp in self.components():
            if comp.circle is not None:
                for io in (0, 1):
                    rep = classes[("co", comp.circle, io)]
                    groups.setdefault(rep, ([], []))[1].append((comp.circle, io))
            else:
                for orbit in self.component_orbits(comp):
                    rep = classes[("o", comp.root, min(orbit))]
                    groups.setdefault(rep, ([], []))[0].extend(orbit)
        groups.setdefault(unb, ([], []))

        def sort_key(item):
            darts, csides = item[1]
            if darts:
                return (0, min(darts))
            return (1, min(csides) if csides else ())

        out = []
        for rep, (darts, csides) in sorted(groups.items(), key=sort_key):
            out.append(Face(index=len(out), bounded=(rep != unb),
                            sides=len(darts) + len(csides),
                            edge_sides=tuple(sorted(darts)),
                            circle_sides=tuple(sorted(csides))))
        self._cache["faces"] = out
        return out

    # -- equality / canonical form -------------------------------------------

    def canonical_key(self):
        if "ckey" not in self._cache:
            from .canonical import web_canonical_key

            self._cache["ckey"] = web_canonical_key(self)
        return self._cache["ckey"]

    def __eq__(self, other):
        if not isinstance(other, Web):
            return NotImplemented
        return self.canonical_key() == other.canonical_key()

    def __hash__(self):
        return hash(self.canonical_key())

    def __repr__(self):
        return (f"<Web boundary={self.signs} vertices={len(self.vertex_sign)} "
                f"edges={len(self.edges)} circles={len(self.circles)}>")


# -- combination operations ------------------------------------------------


def _fresh_id(d):
    return max(d) + 1 if d else 0


def _offset_web(w, dv, de, dc, db):
    """Relabel w's ids by constant offsets (boundary points by db)."""
    def end(x):
        return ("v", x[1] + dv) if x[0] == "v" else ("b", x[1] + db)

    edges = {e + de: (end(a), end(b)) for e, (a, b) in w.edges.items()}
    rot = {v + dv: tuple((e + de, s) for e, s in r) for v, r in w.rotations.items()}
    vs = {v + dv: s for v, s in w.vertex_sign.items()}
    circles = [c + dc for c in w.circles]

    def root(r):
        if r[0] == "c":
            return ("c", r[1] + dc)
        return (r[0], r[1] + (dv if r[0] == "v" else de))

    def fkey(k):
        return k if isinstance(k, str) else (k[0] + de, k[1])

    cont = {}
    for ch, par in w.containment.items():
        cont[root(ch)] = None if par is None else (root(par[0]), fkey(par[1]))
    outer = {root(r): fkey(k) for r, k in w.outer.items()}
    return edges, rot, vs, circles, cont, outer


def _host_slot(w, face):
    """The (component root, local face key) that owns a bounded plane face:
    the unique token of its class that is not its component's outer face."""
    classes, unb = w.face_classes()
    rep = None
    if face.edge_sides:
        d = face.edge_sides[0]
        comp = next(c for c in w.components() if d[0] in c.edge_ids)
        orbit = next(o for o in w.component_orbits(comp) if d in o)
        rep = classes[("o", comp.root, min(orbit))]
    else:
        rep = classes[("co",) + face.circle_sides[0]]
    hosts = []
    for comp in w.components():
        okey = w.outer_key_of(comp)
        for key in w.local_face_keys(comp):
            if key == okey:
                continue
            tok = (("co", comp.circle, 0 if key == "in" else 1)
                   if comp.circle is not None else ("o", comp.root, key))
            if classes[tok] == rep:
                hosts.append((comp.root, key))
    if len(hosts) != 1:
        raise WrongFaceKind(f"face {face.index} cannot host a nested component")
    return hosts[0]


def _offset_root(r, dv, de, dc):
    if r[0] == "c":
        return ("c", r[1] + dc)
    if r[0] == "v":
        return ("v", r[1] + dv)
    return ("e", r[1] + de)


def disjoint_union(w1, w2, nest_into=None):
    """Place w2 next to w1 (boundaries concatenate, w2's points renumbered)
    or, when nest_into is the index of a bounded face of w1, inside that
    face (w2 must then be closed)."""
    dv, de = _fresh_id(w1.vertex_sign), _fresh_id(w1.edges)
    dc = _fresh_id(dict.fromkeys(w1.circles))
    e2, r2, vs2, c2, cont2, out2 = _offset_web(w2, dv, de, dc, w1.n_boundary)
    parent_slot = None
    if nest_into is not None:
        if not w2.is_closed:
            raise NotClosed("only closed webs can be nested into a face")
        face = w1.faces()[nest_into]
        if not face.bounded:
            raise WrongFaceKind("cannot nest into the unbounded face")
        parent_slot = _host_slot(w1, face)
    edges = dict(w1.edges)
    edges.update(e2)
    rot = dict(w1.rotations)
    rot.update(r2)
    vs = dict(w1.vertex_sign)
    vs.update(vs2)
    cont = dict(w1.containment)
    cont.update(cont2)
    if parent_slot is not None:
        for comp in w2.components():
            root = _offset_root(comp.root, dv, de, dc)
            if cont.get(root) is None:
                cont[root] = parent_slot
    outer = dict(w1.outer)
    outer.update(out2)
    return Web(signs=tuple(w1.signs) + tuple(w2.signs), vertex_sign=vs,
               edges=edges, rotations=rot, circles=list(w1.circles) + c2,
               containment=cont, outer=outer)


def _map_key_through(w, root, key, dmap):
    """Map a local face key (min dart of an orbit) through a dart bijection."""
    if isinstance(key, str):
        return key
    comp = w.component_of_root(root)
    for o in w.component_orbits(comp):
        if min(o) == key:
            return min(dmap(d) for d in o)
    raise KeyError((root, key))


def flip_upside_down(w):
    """Reflect w through the boundary line and reverse every arrow.

    Boundary point k keeps its position with its sign flipped; sources
    become sinks; rotations reverse.  This is the lower half of a gluing."""
    edges = {e: (b, a) for e, (a, b) in w.edges.items()}

    def dmap(d):
        return (d[0], 1 - d[1])

    rot = {v: tuple(dmap(d) for d in reversed(r)) for v, r in w.rotations.items()}
    vs = {v: -s for v, s in w.vertex_sign.items()}
    cont = {}
    for ch, par in w.containment.items():
        cont[ch] = None if par is None else (par[0], _map_key_through(w, par[0], par[1], dmap))
    outer = {r: _map_key_through(w, r, k, dmap) for r, k in w.outer.items()}
    return Web(signs=[-s for s in w.signs], vertex_sign=vs, edges=edges,
               rotations=rot, circles=w.circles, containment=cont, outer=outer)


def mirror(w):
    """The mirror web: boundary sequence reversed with signs flipped, all
    edge orientations reversed, all rotations reversed.  An involution."""
    n = w.n_boundary
    flipped = flip_upside_down(w)
    # turning the flipped web the right way up again reverses left and right

    def end(x):
        return x if x[0] == "v" else ("b", n - 1 - x[1])

    edges = {e: (end(a), end(b)) for e, (a, b) in flipped.edges.items()}
    return Web(signs=list(reversed(flipped.signs)), vertex_sign=flipped.vertex_sign,
               edges=edges, rotations=flipped.rotations, circles=flipped.circles,
               containment=flipped.containment, outer=flipped.outer)


def glue(w1, w2):
    """The closed web obtained by flipping w1 below the boundary line and
    welding its boundary points to those of w2 in order.  Both webs must
    carry the same sign sequence."""
    if SignSequence(w1.signs) != SignSequence(w2.signs):
        raise BoundaryMismatch(f"cannot glue boundary {w1.signs} to {w2.signs}")
    if w1.is_closed:
        return disjoint_union(w1, w2)

    from .surgery import weld

    return weld(w1, w2)
