"""Canonical forms for webs.

Two webs are the same plane web exactly when their canonical keys agree,
so equality, hashing and memoisation all reduce to key comparison.

The key of one component is a rooted traversal code: starting from a root
dart, vertices and edges are numbered in breadth-first discovery order and
each vertex records its polarity and its three incident edges in rotation
order starting from the dart it was discovered through.  Components that
touch the boundary have a forced root (the dart at their smallest boundary
point); closed components take the minimum of the code over all root darts.
On top of the component codes, the containment forest is serialised with
children sorted recursively, so the whole key is label-independent.

Sphere codes ignore which face of a closed component is the outer one;
plane codes append it.  The Kuperberg bracket memoises on sphere codes
(the bracket of a closed web does not depend on the choice of outer face);
everything that must distinguish plane embeddings uses plane codes.
"""

from __future__ import annotations


def traversal_code(web, root_dart):
    """Rooted code of the component containing root_dart.  Returns
    (code, edge_numbering) where edge_numbering maps old edge id -> new."""
    base = web.dart_base(root_dart)
    vnum = {}
    enum_ = {}
    queue = []

    def edge_no(e):
        if e not in enum_:
            enum_[e] = len(enum_)
        return enum_[e]

    def far_desc(d):
        e, s = d
        other = web.edges[e][1 - s]
        if other[0] == "b":
            return ("b", other[1])
        v = other[1]
        if v not in vnum:
            vnum[v] = len(vnum)
            queue.append((v, (e, 1 - s)))
        return ("v", vnum[v])

    edge_no(root_dart[0])
    if base[0] == "b":
        start = ("b", base[1], root_dart[1])
        far_desc(root_dart)
    else:
        start = ("v", root_dart[1])
        vnum[base[1]] = 0
        queue.append((base[1], root_dart))
    rows = [start]
    qi = 0
    while qi < len(queue):
        v, entry = queue[qi]
        qi += 1
        rot = web.rotations[v]
        i = rot.index(entry)
        row = [web.vertex_sign[v]]
        for k in range(3):
            d = rot[(i + k) % 3]
            row.append((edge_no(d[0]), d[1], far_desc(d)))
        rows.append(tuple(row))
    return tuple(rows), enum_


def _arc_code(web, comp):
    e = min(comp.edge_ids)
    a, b = web.edges[e]
    return ("arc", a[1], b[1]), {e: 0}


def component_canonical(web, comp, plane=True):
    """Canonical code of one component plus the face-index map for it.

    Returns (code, face_index_of) where face_index_of maps a local face
    key (see Web.local_face_keys) to the face's position under canonical
    labels.  Circles: code ("circ",), faces 'in' -> 0, 'out' -> 1.
    """
    if comp.circle is not None:
        return ("circ",), {"in": 0, "out": 1}

    def face_map(en):
        orbits = web.component_orbits(comp)
        relabeled = {min(o): min((en[e], s) for e, s in o) for o in orbits}
        order = sorted(relabeled.values())
        return {k: order.index(v) for k, v in relabeled.items()}

    if comp.tips:
        tip = comp.tips[0]
        root = next(d for d in ((e, s) for e in comp.edge_ids for s in (0, 1))
                    if web.dart_base(d) == ("b", tip))
        if not comp.vertices:
            code, en = _arc_code(web, comp)
        else:
            code, en = traversal_code(web, root)
        return code, face_map(en)

    best = None
    for e in sorted(comp.edge_ids):
        for s in (0, 1):
            code, en = traversal_code(web, (e, s))
            if plane:
                fm = face_map(en)
                code = code + (("outer", fm[web.outer_key_of(comp)]),)
            if best is None or code < best[0]:
                best = (code, en)
    code, en = best
    return code, face_map(en)


def web_canonical_key(web):
    """Label-independent key of the whole plane web."""
    comps = web.components()
    children = {}
    for child, parent in web.containment.items():
        if parent is not None:
            children.setdefault(parent[0], []).append((parent[1], child))

    canon = {}
    for comp in comps:
        canon[comp.root] = component_canonical(web, comp, plane=True)

    def ser(comp):
        code, face_index_of = canon[comp.root]
        kids = []
        for fkey, child_root in children.get(comp.root, ()):
            child = next(c for c in comps if c.root == child_root)
            kids.append((face_index_of[fkey], ser(child)))
        # codes of different component shapes are not mutually orderable,
        # so sort structurally via repr
        return (code, tuple(sorted(kids, key=repr)))

    top = [ser(c) for c in comps
           if c.tips or web.containment.get(c.root) is None]
    return ("web", str(web.signs), tuple(sorted(top, key=repr)))


def sphere_component_key(web, comp):
    """Canonical code of one closed component up to sphere isotopy."""
    code, _ = component_canonical(web, comp, plane=False)
    return code
