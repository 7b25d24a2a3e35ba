"""Shape predicates on webs, driven by bounded-face side counts.

A digon here means a bounded face with 2 sides, a square one with 4, a
hexagon one with 6; a vertexless circle's inner disk counts 1 side.  Two
faces are adjacent when they share an edge, where a circle counts as an
edge between its two sides.  A bounded face is *nested* when it is not
adjacent to the unbounded face, and webs with no nested faces are called
superficial.  Blocks are the connected components of the bounded faces
under adjacency.
"""

from __future__ import annotations


def bounded_face_profile(web):
    """Sorted side counts of the bounded faces."""
    return sorted(f.sides for f in web.faces() if f.bounded)


def nested_faces(web):
    """Indices of bounded faces that do not share an edge with the
    unbounded face."""
    faces = web.faces()
    outer_keys = next(f.adjacency_keys for f in faces if not f.bounded)
    return {f.index for f in faces
            if f.bounded and not (f.adjacency_keys & outer_keys)}


def blocks(web):
    """Partition of the bounded face indices into adjacency classes,
    each class sorted, classes sorted by smallest member."""
    faces = [f for f in web.faces() if f.bounded]
    parent = {f.index: f.index for f in faces}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    by_key = {}
    for f in faces:
        for k in f.adjacency_keys:
            by_key.setdefault(k, []).append(f.index)
    for members in by_key.values():
        for other in members[1:]:
            ra, rb = find(members[0]), find(other)
            if ra != rb:
                parent[ra] = rb
    groups = {}
    for f in faces:
        groups.setdefault(find(f.index), []).append(f.index)
    return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])


def _square_counts_per_block(web):
    sides = {f.index: f.sides for f in web.faces() if f.bounded}
    return [sum(1 for i in block if sides[i] == 4) for block in blocks(web)]


def _has_digon(web):
    return any(f.bounded and f.sides == 2 for f in web.faces())


def is_non_elliptic(web):
    """No vertexless circle and no bounded face of 2 or 4 sides."""
    if web.circles:
        return False
    return all(f.sides not in (2, 4) for f in web.faces() if f.bounded)


def is_superficial(web):
    """No nested faces."""
    return not nested_faces(web)


def is_semi_non_elliptic(web):
    """No circle, no digon, and at most one square per block."""
    if web.circles or _has_digon(web):
        return False
    return all(n <= 1 for n in _square_counts_per_block(web))


def is_1_elliptic(web):
    """No circle, no digon, at most one square per block except at most
    one block which may have two."""
    if web.circles or _has_digon(web):
        return False
    counts = _square_counts_per_block(web)
    if any(n > 2 for n in counts):
        return False
    return sum(1 for n in counts if n == 2) <= 1


def is_semi_superficial(web):
    """No circle, no digon, exactly one square, and exactly one nested
    face, which is a hexagon sharing an edge with the square."""
    if web.circles or _has_digon(web):
        return False
    faces = web.faces()
    squares = [f for f in faces if f.bounded and f.sides == 4]
    if len(squares) != 1:
        return False
    nested = nested_faces(web)
    if len(nested) != 1:
        return False
    nface = next(f for f in faces if f.index in nested)
    return nface.sides == 6 and bool(nface.adjacency_keys & squares[0].adjacency_keys)


def classify_web(web):
    """All the predicates at once, for reporting."""
    return {
        "profile": bounded_face_profile(web),
        "blocks": blocks(web),
        "nested_faces": sorted(nested_faces(web)),
        "non_elliptic": is_non_elliptic(web),
        "superficial": is_superficial(web),
        "semi_non_elliptic": is_semi_non_elliptic(web),
        "one_elliptic": is_1_elliptic(web),
        "semi_superficial": is_semi_superficial(web),
    }
