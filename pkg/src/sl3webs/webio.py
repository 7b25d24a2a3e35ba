"""Reading and writing webs in the plain-text format of webs.Web.

See the webs module docstring for the format.  parse_web builds a Web
without validating it (so the validator can produce useful reports for
bad inputs); syntactic problems raise ParseError.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .webs import SignSequence, Web

_ID = re.compile(r"^([vebc])(\d+)$")


def _ident(token, kinds):
    m = _ID.match(token)
    if not m or m.group(1) not in kinds:
        raise ParseError(f"expected one of {'/'.join(kinds)}<number>, got {token!r}")
    return m.group(1), int(m.group(2))


def parse_web(text):
    name = ""
    signs = None
    vertex_sign = {}
    edges = {}
    rot_lines = {}
    circles = []
    nest_lines = []
    outer_lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind, args = parts[0], parts[1:]
        try:
            if kind == "web":
                name = " ".join(args)
            elif kind == "boundary":
                if len(args) != 1:
                    raise ParseError("boundary takes one sign string")
                signs = SignSequence.parse(args[0])
            elif kind == "vertex":
                if len(args) != 2 or args[1] not in ("source", "sink"):
                    raise ParseError("usage: vertex v<k> source|sink")
                _, v = _ident(args[0], "v")
                if v in vertex_sign:
                    raise ParseError(f"vertex v{v} declared twice")
                vertex_sign[v] = 1 if args[1] == "source" else -1
            elif kind == "edge":
                if len(args) != 3:
                    raise ParseError("usage: edge e<k> <tail> <head>")
                _, e = _ident(args[0], "e")
                if e in edges:
                    raise ParseError(f"edge e{e} declared twice")
                ends = []
                for tok in args[1:]:
                    k, i = _ident(tok, "vb")
                    ends.append(("v" if k == "v" else "b", i))
                edges[e] = tuple(ends)
            elif kind == "rot":
                if len(args) != 4:
                    raise ParseError("usage: rot v<k> e<a> e<b> e<c>")
                _, v = _ident(args[0], "v")
                if v in rot_lines:
                    raise ParseError(f"rotation of v{v} declared twice")
                rot_lines[v] = [_ident(t, "e")[1] for t in args[1:]]
            elif kind == "circle":
                if len(args) != 1:
                    raise ParseError("usage: circle c<k>")
                _, c = _ident(args[0], "c")
                if c in circles:
                    raise ParseError(f"circle c{c} declared twice")
                circles.append(c)
            elif kind == "nest":
                if len(args) != 4 or args[1] != "in":
                    raise ParseError("usage: nest <comp> in <comp> <face>")
                nest_lines.append((args[0], args[2], args[3]))
            elif kind == "outer":
                if len(args) != 2:
                    raise ParseError("usage: outer <comp> <face>")
                outer_lines.append((args[0], args[1]))
            else:
                raise ParseError(f"unknown line kind {kind!r}")
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc.message}") from None

    rotations = {}
    for v, edge_ids in rot_lines.items():
        darts = []
        used = set()
        for e in edge_ids:
            if e not in edges:
                raise ParseError(f"rotation of v{v} lists unknown edge e{e}")
            side = next((s for s in (0, 1)
                         if edges[e][s] == ("v", v) and (e, s) not in used), None)
            if side is None:
                raise ParseError(f"rotation of v{v} lists non-incident edge e{e}")
            used.add((e, side))
            darts.append((e, side))
        rotations[v] = tuple(darts)

    web = Web(signs=signs or (), vertex_sign=vertex_sign, edges=edges,
              rotations=rotations, circles=circles, name=name)

    def resolve(token):
        kind, i = _ident(token, "vc")
        for comp in web.components():
            if (kind == "c" and comp.circle == i) or (kind == "v" and i in comp.vertices):
                return comp
        raise ParseError(f"no component contains {token}")

    def face_key(comp, idx_text):
        try:
            idx = int(idx_text)
        except ValueError:
            raise ParseError(f"bad face index {idx_text!r}") from None
        keys = web.local_face_keys(comp)
        if not 0 <= idx < len(keys):
            raise ParseError(f"component {comp.root} has no face {idx}")
        return keys[idx]

    containment = {}
    for child_tok, parent_tok, idx_text in nest_lines:
        child = resolve(child_tok)
        parent = resolve(parent_tok)
        if child.root in containment:
            raise ParseError(f"component {child_tok} nested twice")
        containment[child.root] = (parent.root, face_key(parent, idx_text))
    outer = {}
    for tok, idx_text in outer_lines:
        comp = resolve(tok)
        if comp.root in outer:
            raise ParseError(f"outer face of {tok} declared twice")
        outer[comp.root] = face_key(comp, idx_text)

    return Web(signs=signs or (), vertex_sign=vertex_sign, edges=edges,
               rotations=rotations, circles=circles, containment=containment,
               outer=outer, name=name)


def _root_token(root):
    return f"{root[0]}{root[1]}"


def web_to_text(web):
    """Serialize a web; parse_web(web_to_text(w)) reproduces w exactly."""
    lines = []
    if web.name:
        lines.append(f"web {web.name}")
    if not web.is_closed:
        lines.append(f"boundary {web.signs}")
    for v in sorted(web.vertex_sign):
        lines.append(f"vertex v{v} {'source' if web.vertex_sign[v] > 0 else 'sink'}")
    for e in sorted(web.edges):
        a, b = web.edges[e]
        lines.append(f"edge e{e} {a[0]}{a[1]} {b[0]}{b[1]}")
    for v in sorted(web.rotations):
        lines.append(f"rot v{v} " + " ".join(f"e{e}" for e, _ in web.rotations[v]))
    for c in web.circles:
        lines.append(f"circle c{c}")
    by_root = {c.root: c for c in web.components()}

    def face_index(root, key):
        return web.local_face_keys(by_root[root]).index(key)

    for child in sorted(web.containment):
        slot = web.containment[child]
        if slot is None:
            continue
        proot, key = slot
        lines.append(f"nest {_root_token(child)} in {_root_token(proot)} "
                     f"{face_index(proot, key)}")
    for comp in web.components():
        if comp.is_closed and comp.circle is None:
            key = web.outer_key_of(comp)
            lines.append(f"outer {_root_token(comp.root)} {face_index(comp.root, key)}")
    return "\n".join(lines) + "\n"


def parse_webs(text):
    """Every web block in the text, in order.  A `web` header line opens
    a new block; lines before the first header form a block of their
    own.  Parse errors report line numbers within the block."""
    blocks = []
    current = []

    def flush():
        if any(line.split("#", 1)[0].strip() for line in current):
            blocks.append("\n".join(current))

    for raw in text.splitlines():
        stripped = raw.split("#", 1)[0].strip()
        if stripped == "web" or stripped.startswith("web "):
            flush()
            current = [raw]
        else:
            current.append(raw)
    flush()
    return [parse_web(b) for b in blocks]


def load_webs(path):
    with open(path, encoding="utf-8") as fh:
        return parse_webs(fh.read())


def load_web(path):
    with open(path, encoding="utf-8") as fh:
        return parse_web(fh.read())


def save_web(path, web):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(web_to_text(web))
