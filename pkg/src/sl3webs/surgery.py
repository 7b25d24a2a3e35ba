"""Cut-and-weld machinery: gluing along the boundary and face reductions.

Everything here preserves the containment forest.  The common pattern:

  1. perform the structural cut (delete edges, reverse edges, dissolve the
     2-valent junctions left behind by fusing maximal chains into single
     edges; closed chains become vertexless circles);
  2. work out, for every face of the *new* web, which region of the plane
     it lies in, by mapping its darts back to faces of the old picture;
  3. rebuild the containment forest by walking the regions from the
     unbounded one inwards (place_components).

For face reductions the regions are the old plane faces, merged whenever a
deleted edge separated two of them.  For gluing, the regions are the old
bounded faces of both halves plus the *pockets* of the two outer regions
(the parts of a half plane's outer face cut off by components hanging over
an interval of the line); the pocket over gap k of the upper half and the
pocket under gap k of the lower half join across the line, and the two far
regions join around the ends.

Webs with a boundary treat all pockets of the upper half plane as parts of
the single outer face (isotopy in the skein module cannot tell them apart,
and no bounded-face computation depends on them); the pocket bookkeeping
is only needed at the moment of gluing, where pockets become honest faces.
"""

from __future__ import annotations

from .errors import WrongFaceKind
from .laurent import quantum_int
from .webs import Web, _fresh_id, _offset_web

FAR = ("far",)


# -- chain dissolution -------------------------------------------------------


def dissolve_ends(edges, junctions):
    """Fuse maximal chains running through 2-valent junction ends.

    edges: dict id -> (tail end, head end); junctions: set of ends, each of
    which must occur exactly once as a tail and once as a head.  Returns
    (new_edges, fused, cycles): untouched edges keep their ids, fused
    chains get fresh ids and are listed in fused[new_id] = (old ids in
    chain order); closed chains come back in cycles and must be turned
    into circles by the caller.
    """
    tail_at = {}
    head_at = {}
    for e, (a, b) in edges.items():
        if a in junctions:
            assert a not in tail_at, f"junction {a} is a tail twice"
            tail_at[a] = e
        if b in junctions:
            assert b not in head_at, f"junction {b} is a head twice"
            head_at[b] = e
    assert set(tail_at) == set(junctions) == set(head_at), \
        "each junction needs exactly one in- and one out-edge"
    touched = set(tail_at.values()) | set(head_at.values())
    new_edges = {e: ab for e, ab in edges.items() if e not in touched}
    nxt = max(edges) + 1 if edges else 0
    fused = {}
    cycles = []
    seen = set()
    for e in sorted(touched):
        a, b = edges[e]
        if a in junctions:
            continue  # chains start where the tail is anchored
        chain = [e]
        seen.add(e)
        end = b
        while end in junctions:
            e2 = tail_at[end]
            chain.append(e2)
            seen.add(e2)
            end = edges[e2][1]
        fused[nxt] = tuple(chain)
        new_edges[nxt] = (a, end)
        nxt += 1
    for e in sorted(touched):
        if e in seen:
            continue
        chain = [e]
        seen.add(e)
        end = edges[e][1]
        while tail_at[end] != chain[0]:
            e2 = tail_at[end]
            chain.append(e2)
            seen.add(e2)
            end = edges[e2][1]
        cycles.append(tuple(chain))
    return new_edges, fused, cycles


def anchor_dart_map(fused):
    """Old dart -> new dart at the surviving ends of fused chains."""
    m = {}
    for new_e, chain in fused.items():
        m[(chain[0], 0)] = (new_e, 0)
        m[(chain[-1], 1)] = (new_e, 1)
    return m


# -- containment rebuild ------------------------------------------------------


def place_components(result, region_of, unbounded_region):
    """Rebuild the containment forest of `result` from region data.

    region_of: dict (component root, local face key) -> region id, where a
    circle's keys are 'in'/'out' with arbitrary meaning (this routine
    relabels so that 'in' is the side where its children live).  Every
    region reachable from the unbounded one must be keyed consistently.
    Returns (containment, outer).
    """
    comps = result.components()
    entries = {}
    for comp in comps:
        keys = (("in", "out") if comp.circle is not None
                else [min(o) for o in result.component_orbits(comp)])
        for k in keys:
            entries.setdefault(region_of[(comp.root, k)], []).append((comp, k))
    containment = {}
    outer = {}
    placed = set()
    queue = [(unbounded_region, None)]
    qi = 0
    seen_regions = set()
    while qi < len(queue):
        region, host = queue[qi]
        qi += 1
        if region in seen_regions:
            raise AssertionError(f"region {region} reached twice")
        seen_regions.add(region)
        for comp, key in entries.get(region, ()):
            if host is not None and comp.root == host[0]:
                continue  # the face through which this region was entered
            if comp.root in placed:
                raise AssertionError(f"two faces of {comp.root} border one region")
            placed.add(comp.root)
            if comp.tips:
                assert host is None, "a boundary component ended up nested"
            else:
                containment[comp.root] = host
            if comp.circle is not None:
                other = "in" if key == "out" else "out"
                queue.append((region_of[(comp.root, other)], (comp.root, "in")))
            else:
                if comp.is_closed:
                    outer[comp.root] = key
                for k2 in (min(o) for o in result.component_orbits(comp)):
                    if k2 != key:
                        queue.append((region_of[(comp.root, k2)], (comp.root, k2)))
    assert placed == {c.root for c in comps}, "not every component was placed"
    return containment, outer


# -- gluing -------------------------------------------------------------------


def _outer_pieces(w):
    """Pockets of the outer region of a web with boundary.

    Returns (gap_piece, dart_piece): gap_piece[k] is the piece id of the
    region just above the interval (b_k, b_{k+1}) (k = -1 for west of b0);
    dart_piece maps every dart of the outer face class to its piece id.
    Pieces are FAR or ('pocket', component root, tip).
    """
    comp_at_tip = {}
    tip_orbit = {}
    for comp in w.components():
        for k in comp.tips:
            comp_at_tip[k] = comp.root
        if comp.tips:
            orbit = next(o for o in w.component_orbits(comp)
                         if any(w.dart_base(d)[0] == "b" for d in o))
            tip_orbit[comp.root] = orbit
    n = w.n_boundary
    remaining = {}
    for k in range(n):
        remaining[comp_at_tip[k]] = remaining.get(comp_at_tip[k], 0) + 1
    stack = []  # [root, last tip]
    gap_piece = {-1: FAR}
    for k in range(n):
        c = comp_at_tip[k]
        if not stack or stack[-1][0] != c:
            assert all(r != c for r, _ in stack), "interleaved boundary components"
            stack.append([c, k])
        stack[-1][1] = k
        remaining[c] -= 1
        if not remaining[c]:
            assert stack[-1][0] == c
            stack.pop()
        gap_piece[k] = ("pocket", stack[-1][0], stack[-1][1]) if stack else FAR

    dart_piece = {}
    for root, orbit in tip_orbit.items():
        tips_pos = [i for i, d in enumerate(orbit) if w.dart_base(d)[0] == "b"]
        start = min(tips_pos, key=lambda i: w.dart_base(orbit[i])[1])
        cur = None
        for j in range(len(orbit)):
            d = orbit[(start + j) % len(orbit)]
            base = w.dart_base(d)
            if base[0] == "b":
                cur = gap_piece[base[1]]
            dart_piece[d] = cur
    # closed top-level components sit in the far region by convention
    classes, unb = w.face_classes()
    for comp in w.components():
        if comp.tips:
            continue
        okey = w.outer_key_of(comp)
        if comp.circle is None:
            tok = ("o", comp.root, okey)
        else:
            tok = ("co", comp.circle, 1)
        if classes[tok] == unb:
            if comp.circle is None:
                orbit = next(o for o in w.component_orbits(comp) if min(o) == okey)
                for d in orbit:
                    dart_piece[d] = FAR
    return gap_piece, dart_piece


def weld(w1, w2):
    """The closed web obtained by flipping w1 below the line and welding
    its boundary points to those of w2.  Both must carry the same signs.

    All face lookups for the lower half are done on the original w1 (a
    valid upper-half-plane web).  The flip keeps edge and circle ids and
    relabels darts (e, s) -> (e, 1 - s); since the reflection also swaps
    left and right, the face to the *right* of a lower dart is the mirror
    image of the face to the right of the *same label* (e, s) in w1, so
    lookups need no transport at all.
    """
    from .webs import flip_upside_down

    n = w2.n_boundary
    assert n == w1.n_boundary and n > 0
    lower = flip_upside_down(w1)
    dv, de = _fresh_id(lower.vertex_sign), _fresh_id(lower.edges)
    dc = _fresh_id(dict.fromkeys(lower.circles))
    ue, ur, uvs, uc, _, _ = _offset_web(w2, dv, de, dc, 0)
    edges = dict(lower.edges)
    edges.update(ue)
    rotations = dict(lower.rotations)
    rotations.update(ur)
    vertex_sign = dict(lower.vertex_sign)
    vertex_sign.update(uvs)
    circles = list(lower.circles) + uc

    junctions = {("b", k) for k in range(n)}
    new_edges, fused, cycles = dissolve_ends(edges, junctions)
    adm = anchor_dart_map(fused)
    rotations = {v: tuple(adm.get(d, d) for d in r) for v, r in rotations.items()}
    cid0 = max(circles) + 1 if circles else 0
    cycle_cid = {}
    for i, chain in enumerate(cycles):
        cycle_cid[chain] = cid0 + i
        circles.append(cid0 + i)
    result = Web(signs=(), vertex_sign=vertex_sign, edges=new_edges,
                 rotations=rotations, circles=circles)

    # regions: bounded faces of both halves + pockets of the outer regions
    sides = {"low": w1, "up": w2}
    gap_piece = {}
    dart_piece = {}
    classes = {}
    unb = {}
    for tag, w in sides.items():
        gap_piece[tag], dart_piece[tag] = _outer_pieces(w)
        classes[tag], unb[tag] = w.face_classes()

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

    def piece_region(tag, piece):
        return ("p", tag, piece)

    for k in range(-1, n):
        union(piece_region("low", gap_piece["low"][k]),
              piece_region("up", gap_piece["up"][k]))

    def old_dart_region(tag, d):
        w = sides[tag]
        comp = next(c for c in w.components() if d[0] in c.edge_ids)
        orbit = next(o for o in w.component_orbits(comp) if d in o)
        rep = classes[tag][("o", comp.root, min(orbit))]
        if rep == unb[tag]:
            return find(piece_region(tag, dart_piece[tag][d]))
        return find(("bf", tag, rep))

    def old_circle_side_region(tag, cid, io):
        rep = classes[tag][("co", cid, io)]
        if rep == unb[tag]:
            return find(piece_region(tag, FAR))
        return find(("bf", tag, rep))

    def back(e):
        """(side tag, old edge id) of a combined-web edge id."""
        return ("up", e - de) if e >= de else ("low", e)

    def new_dart_region(d):
        e, s = d
        if e in fused:
            e = fused[e][0]
        tag, old = back(e)
        return old_dart_region(tag, (old, s))

    region_of = {}
    for comp in result.components():
        if comp.circle is not None:
            cid = comp.circle
            if cid >= cid0:
                chain = next(ch for ch, c in cycle_cid.items() if c == cid)
                tag, old = back(chain[0])
                region_of[(comp.root, "in")] = old_dart_region(tag, (old, 0))
                region_of[(comp.root, "out")] = old_dart_region(tag, (old, 1))
            else:
                tag, old = ("up", cid - dc) if cid >= dc else ("low", cid)
                region_of[(comp.root, "in")] = old_circle_side_region(tag, old, 0)
                region_of[(comp.root, "out")] = old_circle_side_region(tag, old, 1)
        else:
            for orbit in result.component_orbits(comp):
                region_of[(comp.root, min(orbit))] = new_dart_region(orbit[0])

    unbounded = find(piece_region("up", FAR))
    region_of = {k: find(v) for k, v in region_of.items()}
    containment, outer = place_components(result, region_of, unbounded)
    return Web(signs=(), vertex_sign=vertex_sign, edges=new_edges,
               rotations=rotations, circles=circles,
               containment=containment, outer=outer)


# -- plane face reductions ----------------------------------------------------


def reduce_circle(web, circle_id):
    """Remove a vertexless circle; returns (new web, coefficient [3])."""
    if circle_id not in web.circles:
        raise WrongFaceKind(f"c{circle_id} is not a circle of this web")
    root = ("c", circle_id)
    slot = web.containment.get(root)
    cont = {ch: (slot if par is not None and par[0] == root else par)
            for ch, par in web.containment.items() if ch != root}
    out = Web(signs=web.signs, vertex_sign=web.vertex_sign, edges=web.edges,
              rotations=web.rotations,
              circles=[c for c in web.circles if c != circle_id],
              containment=cont, outer=web.outer)
    return out, quantum_int(3)


def _pure_bounded_orbit(web, face, want_sides):
    """The face's single orbit, or raise WrongFaceKind."""
    if not face.bounded:
        raise WrongFaceKind(f"face {face.index} is unbounded")
    if face.circle_sides or len(face.edge_sides) != want_sides:
        raise WrongFaceKind(f"face {face.index} is not a clean {want_sides}-gon")
    d0 = face.edge_sides[0]
    comp = next(c for c in web.components() if d0[0] in c.edge_ids)
    orbit = next(o for o in web.component_orbits(comp) if d0 in o)
    if set(orbit) != set(face.edge_sides):
        raise WrongFaceKind(f"face {face.index} has other components nested in it")
    if len({e for e, _ in orbit}) != want_sides:
        raise WrongFaceKind(f"face {face.index} walks some edge twice")
    return orbit


def _apply_cut(web, delete, reverse, dissolve_vertices):
    """Shared tail of the digon/square moves: cut, fuse, re-place.

    delete: edge ids to remove; reverse: edge ids to flip; the dissolved
    vertices must be left 2-valent.  Returns the new Web.
    """
    old_faces = web.faces()
    face_of = {}
    for f in old_faces:
        for d in f.edge_sides:
            face_of[d] = f.index
        for cs in f.circle_sides:
            face_of[("co",) + cs] = f.index
    unbounded_old = next(f.index for f in old_faces if not f.bounded)

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

    edges = dict(web.edges)
    for e in delete:
        union(face_of[(e, 0)], face_of[(e, 1)])
        del edges[e]
    for e in reverse:
        a, b = edges[e]
        edges[e] = (b, a)

    def pre_dart(e, s):
        """Map a post-reversal dart to the dart it was before the cut."""
        return (e, 1 - s) if e in reverse else (e, s)

    junctions = {("v", v) for v in dissolve_vertices}
    new_edges, fused, cycles = dissolve_ends(edges, junctions)
    adm = anchor_dart_map(fused)
    rotations = {v: tuple(adm.get(d, d) for d in r)
                 for v, r in web.rotations.items() if v not in dissolve_vertices}
    vertex_sign = {v: s for v, s in web.vertex_sign.items()
                   if v not in dissolve_vertices}
    circles = list(web.circles)
    cid0 = max(circles) + 1 if circles else 0
    cycle_cid = {}
    for i, chain in enumerate(cycles):
        cycle_cid[chain] = cid0 + i
        circles.append(cid0 + i)
    result = Web(signs=web.signs, vertex_sign=vertex_sign, edges=new_edges,
                 rotations=rotations, circles=circles)

    def old_region_of_dart(d):
        e, s = d
        if e in fused:
            g1 = fused[e][0]
            return find(face_of[pre_dart(g1, s)])
        return find(face_of[pre_dart(e, s)])

    region_of = {}
    for comp in result.components():
        if comp.circle is not None:
            cid = comp.circle
            if cid in cycle_cid.values():
                chain = next(ch for ch, c in cycle_cid.items() if c == cid)
                region_of[(comp.root, "in")] = find(face_of[pre_dart(chain[0], 0)])
                region_of[(comp.root, "out")] = find(face_of[pre_dart(chain[0], 1)])
            else:
                region_of[(comp.root, "in")] = find(face_of[("co", cid, 0)])
                region_of[(comp.root, "out")] = find(face_of[("co", cid, 1)])
        else:
            for orbit in result.component_orbits(comp):
                region_of[(comp.root, min(orbit))] = old_region_of_dart(orbit[0])

    containment, outer = place_components(result, region_of, find(unbounded_old))
    return Web(signs=web.signs, vertex_sign=vertex_sign, edges=new_edges,
               rotations=rotations, circles=circles,
               containment=containment, outer=outer)


def reduce_digon(web, face):
    """Collapse a 2-sided bounded face; returns (new web, coefficient [2])."""
    orbit = _pure_bounded_orbit(web, face, 2)
    d1, d2 = orbit
    keep, drop = sorted({d1[0], d2[0]})
    u = web.dart_base(d1)
    v = web.dart_base(d2)
    assert u[0] == "v" and v[0] == "v"
    return _apply_cut(web, delete=[drop], reverse=[keep],
                      dissolve_vertices={u[1], v[1]}), quantum_int(2)


def resolve_square(web, face):
    """The two reconnections of a 4-sided bounded face (coefficient 1 each)."""
    orbit = _pure_bounded_orbit(web, face, 4)
    es = [d[0] for d in orbit]
    vs = {web.dart_base(d)[1] for d in orbit}
    assert len(vs) == 4, "square face with repeated corner"
    out = []
    for delete, reverse in (((es[0], es[2]), (es[1], es[3])),
                            ((es[1], es[3]), (es[0], es[2]))):
        out.append(_apply_cut(web, delete=list(delete), reverse=list(reverse),
                              dissolve_vertices=vs))
    return tuple(out)
