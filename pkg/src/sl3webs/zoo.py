"""A gallery of named webs and pre-foams used in the docs and tests.

Everything here is built from the primitive constructors; nothing in
the library depends on this module.
"""

from __future__ import annotations

from .foams import Facet, PreFoam
from .webs import Web


def circle_web():
    return Web(circles=[0], name="circle")


def arc():
    return Web(signs=(1, -1), edges={0: (("b", 0), ("b", 1))}, name="arc")


def y_web():
    return Web(signs=(1, 1, 1), vertex_sign={0: -1},
               edges={0: (("b", 0), ("v", 0)), 1: (("b", 1), ("v", 0)),
                      2: (("b", 2), ("v", 0))},
               rotations={0: ((0, 1), (1, 1), (2, 1))}, name="y")


def theta_web():
    return Web(vertex_sign={0: 1, 1: -1},
               edges={0: (("v", 0), ("v", 1)), 1: (("v", 0), ("v", 1)),
                      2: (("v", 0), ("v", 1))},
               rotations={0: ((0, 0), (1, 0), (2, 0)),
                          1: ((0, 1), (2, 1), (1, 1))}, name="theta")


def ladder(rungs):
    """Two vertical rails joined by `rungs` rungs: a column of
    rungs - 1 squares sharing rails, all in one block.  Boundary is the
    four rail ends (counterclockwise from bottom-left)."""
    if rungs < 1:
        raise ValueError("need at least one rung")
    vs = {}
    edges = {}
    eid = 0
    left = list(range(rungs))
    right = list(range(rungs, 2 * rungs))
    for i in range(rungs):
        vs[left[i]] = -1 if i % 2 == 0 else 1
        vs[right[i]] = 1 if i % 2 == 0 else -1

    def add(a, b):
        nonlocal eid
        ends = []
        for x in (a, b):
            ends.append(x if isinstance(x, tuple) else ("v", x))
        tail_first = (vs[ends[0][1]] == 1) if ends[0][0] == "v" else None
        if tail_first is None:
            # boundary end: direction fixed by the vertex end
            tail_first = vs[ends[1][1]] == -1
        edges[eid] = tuple(ends) if tail_first else (ends[1], ends[0])
        eid += 1
        return eid - 1

    rung = [add(left[i], right[i]) for i in range(rungs)]
    lrail = [add(left[i], left[i + 1]) for i in range(rungs - 1)]
    rrail = [add(right[i], right[i + 1]) for i in range(rungs - 1)]
    # boundary: b0 bottom-left, b1 bottom-right, b2 top-right, b3 top-left
    lbot = add(("b", 0), left[0])
    rbot = add(("b", 1), right[0])
    rtop = add(("b", 2), right[-1])
    ltop = add(("b", 3), left[-1])

    def dart(e, v):
        return (e, 0) if edges[e][0] == ("v", v) else (e, 1)

    rot = {}
    for i in range(rungs):
        down_l = lbot if i == 0 else lrail[i - 1]
        up_l = ltop if i == rungs - 1 else lrail[i]
        down_r = rbot if i == 0 else rrail[i - 1]
        up_r = rtop if i == rungs - 1 else rrail[i]
        # left rail vertex: counterclockwise = down, rung, up
        rot[left[i]] = (dart(down_l, left[i]), dart(rung[i], left[i]),
                        dart(up_l, left[i]))
        # right rail vertex: counterclockwise = down, up, rung
        rot[right[i]] = (dart(down_r, right[i]), dart(up_r, right[i]),
                         dart(rung[i], right[i]))
    signs = []
    for b, v in ((0, left[0]), (1, right[0]), (2, right[-1]), (3, left[-1])):
        signs.append(1 if vs[v] == -1 else -1)
    return Web(signs=tuple(signs), vertex_sign=vs, edges=edges,
               rotations=rot, name=f"ladder{rungs}")


def square_web():
    """The one-square web with boundary (+,-,-,+)."""
    return ladder(2)


def drum():
    """Hexagonal prism: two hexagons joined by six spokes; closed, with
    six square faces around a hexagonal core."""
    vs = {}
    for i in range(6):
        vs[i] = 1 if i % 2 == 0 else -1
        vs[6 + i] = -1 if i % 2 == 0 else 1
    edges = {}
    eid = 0

    def add(a, b):
        nonlocal eid
        edges[eid] = (("v", a), ("v", b)) if vs[a] == 1 else (("v", b), ("v", a))
        eid += 1
        return eid - 1

    hex_in = [add(i, (i + 1) % 6) for i in range(6)]
    hex_out = [add(6 + i, 6 + (i + 1) % 6) for i in range(6)]
    spoke = [add(i, 6 + i) for i in range(6)]

    def dart(e, v):
        return (e, 0) if edges[e][0] == ("v", v) else (e, 1)

    rot = {}
    for i in range(6):
        rot[i] = (dart(hex_in[i], i), dart(spoke[i], i),
                  dart(hex_in[(i - 1) % 6], i))
        rot[6 + i] = (dart(hex_out[i], 6 + i), dart(hex_out[(i - 1) % 6], 6 + i),
                      dart(spoke[i], 6 + i))
    return Web(vertex_sign=vs, edges=edges, rotations=rot, name="drum")


def w0():
    """Six nearest-neighbour arcs on the boundary (+,-,-,+,+,-,-,+,+,-,-,+)."""
    eps = (1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1, 1)
    edges = {}
    for i in range(6):
        a, b = 2 * i, 2 * i + 1
        edges[i] = ((("b", a), ("b", b)) if eps[a] == 1
                    else (("b", b), ("b", a)))
    return Web(signs=eps, edges=edges, name="w0")


def flower(squared_petals=()):
    """A hexagon ringed by six petals, each petal carrying two legs.

    The hexagon is the unique nested face.  Petals listed in
    `squared_petals` lose their two legs and shrink to squares, giving
    the semi-superficial shapes."""
    squared = set(squared_petals)
    vs = {}
    edges = {}
    eid = 0
    M = lambda i: i % 6
    N = lambda i: 6 + i % 6
    Y = lambda i: 12 + i % 6
    X = lambda i: 18 + i % 6
    for i in range(6):
        vs[M(i)] = -1 if i % 2 == 0 else 1
        vs[N(i)] = 1 if i % 2 == 0 else -1
        if i not in squared:
            vs[Y(i)] = -1 if i % 2 == 0 else 1
            vs[X(i)] = 1 if i % 2 == 0 else -1
    legs = []  # boundary ends in counterclockwise order

    def add(u, v):
        nonlocal eid

        def is_tail(end):
            if end[0] == "v":
                return vs[end[1]] == 1
            return end[1] == "tail"

        a = u if is_tail(u) else v
        b = v if is_tail(u) else u
        edges[eid] = (a, b)
        eid += 1
        return eid - 1

    h = {i: add(("v", M(i)), ("v", M(i + 1))) for i in range(6)}
    r = {i: add(("v", M(i)), ("v", N(i))) for i in range(6)}
    p, q, t, ly, lx, rim = {}, {}, {}, {}, {}, {}
    for i in range(6):
        if i in squared:
            rim[i] = add(("v", N(i)), ("v", N(i + 1)))
            continue
        p[i] = add(("v", N(i)), ("v", Y(i)))
        q[i] = add(("v", Y(i)), ("v", X(i)))
        t[i] = add(("v", X(i)), ("v", N(i + 1)))
        ly[i] = add(("v", Y(i)), ("b", "tail" if vs[Y(i)] == -1 else "head"))
        lx[i] = add(("v", X(i)), ("b", "tail" if vs[X(i)] == -1 else "head"))
        legs.extend([ly[i], lx[i]])

    # number the boundary points and fix the leg edge ends
    signs = []
    for k, e in enumerate(legs):
        a, b = edges[e]
        if a[0] == "b":
            edges[e] = (("b", k), b)
            signs.append(1)
        else:
            edges[e] = (a, ("b", k))
            signs.append(-1)

    def dart(e, v):
        return (e, 0) if edges[e][0] == ("v", v) else (e, 1)

    rot = {}
    for i in range(6):
        rot[M(i)] = (dart(r[i], M(i)), dart(h[i], M(i)), dart(h[(i - 1) % 6], M(i)))
        before = t[(i - 1) % 6] if (i - 1) % 6 not in squared else rim[(i - 1) % 6]
        after = p[i] if i not in squared else rim[i]
        rot[N(i)] = (dart(r[i], N(i)), dart(before, N(i)), dart(after, N(i)))
        if i in squared:
            continue
        rot[Y(i)] = (dart(ly[i], Y(i)), dart(q[i], Y(i)), dart(p[i], Y(i)))
        rot[X(i)] = (dart(lx[i], X(i)), dart(t[i], X(i)), dart(q[i], X(i)))
    name = "flower" if not squared else "flower_sq" + "".join(map(str, sorted(squared)))
    return Web(signs=tuple(signs), vertex_sign=vs, edges=edges,
               rotations=rot, name=name)


def kk_w():
    """The 24-vertex flower whose self-pairing has leading coefficient 2."""
    return flower()


# --- pre-foams --------------------------------------------------------------


def sphere_foam(dots=0):
    f = PreFoam(name=f"sphere{dots}")
    f.facets[0] = Facet(genus=0, dots=dots, slots=0)
    return f


def torus_foam():
    f = PreFoam(name="torus")
    f.facets[0] = Facet(genus=1, dots=0, slots=0)
    return f


def theta_foam(d0=0, d1=1, d2=2):
    f = PreFoam(name=f"theta{d0}{d1}{d2}")
    for i, d in enumerate((d0, d1, d2)):
        f.facets[i] = Facet(genus=0, dots=d, slots=1)
    f.singular[0] = ((0, 0), (1, 0), (2, 0))
    return f


def t_foam():
    """Six one-dotted annuli in a necklace, each pair of neighbours
    joined to a disk along a singular circle, with alternating cyclic
    orders; evaluates to -2."""
    f = PreFoam(name="t")
    for i in range(6):
        f.facets[i] = Facet(genus=0, dots=1, slots=2)
    for i in range(6):
        f.facets[6 + i] = Facet(genus=0, dots=0, slots=1)
    for i in range(6):
        a, b, d = i, (i + 1) % 6, 6 + i
        if i % 2 == 0:
            f.singular[i] = ((a, 0), (b, 1), (d, 0))
        else:
            f.singular[i] = ((a, 0), (d, 0), (b, 1))
    return f
