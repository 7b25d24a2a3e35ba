"""Closed pre-foam evaluation over the Frobenius algebra Q[X]/(X^3).

A pre-foam here is combinatorial: facets (compact oriented surfaces
with genus, dots, and numbered boundary slots) glued along singular
circles, each circle meeting exactly three facet slots in a given
cyclic order.  A facet contributes the iterated coproduct of
X^dots * handle^genus, one tensor leg per slot (a closed facet
contributes the trace instead), and every singular circle contracts its
three legs with the cyclically invariant form

    theta(X^a, X^b, X^c) = +1 / -1  if (a,b,c) is an even / odd
                                     arrangement of (0,1,2), else 0.

The grading (deg 1 = -2, deg X = 0, deg X^2 = 2) concentrates the trace
in top degree, which forces every pre-foam of nonzero total degree
-2*chi + 2*dots to evaluate to zero.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import MalformedFoam, NotClosed, ParseError

# --- the Frobenius algebra -------------------------------------------------


class FrobElement:
    """c0 + c1*X + c2*X^2 with rational coefficients, X^3 = 0."""

    __slots__ = ("coeffs",)

    def __init__(self, c0=0, c1=0, c2=0):
        self.coeffs = (Fraction(c0), Fraction(c1), Fraction(c2))

    @staticmethod
    def x_power(k, coeff=1):
        if k >= 3:
            return FrobElement()
        c = [0, 0, 0]
        c[k] = coeff
        return FrobElement(*c)

    def __add__(self, other):
        return FrobElement(*(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FrobElement(*(c * other for c in self.coeffs))
        out = [Fraction(0)] * 3
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                if i + j < 3 and a and b:
                    out[i + j] += a * b
        return FrobElement(*out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, FrobElement) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"FrobElement{self.coeffs}"


def basis_degree(k):
    """deg(X^k): the unit sits in degree -2."""
    return 2 * k - 2


def frob_trace(a):
    """tau: reads off -1 times the X^2 coefficient."""
    return -a.coeffs[2]


def handle_element():
    """Effect of adding a handle to a facet: m(Delta(1)) = -3 X^2."""
    return FrobElement(0, 0, -3)


def comultiply(a, legs):
    """Delta^(legs-1) applied to a: a dict {exponent tuple: coefficient}
    with `legs` entries per tuple.  Delta^m(X^k) spreads k + 2m across
    the legs with a (-1)^m sign, each leg capped at X^2."""
    if legs < 1:
        raise ValueError("need at least one leg")
    m = legs - 1
    sign = (-1) ** m
    out = {}
    for k, c in enumerate(a.coeffs):
        if not c:
            continue
        total = k + 2 * m
        for split in itertools.product(range(3), repeat=legs):
            if sum(split) == total:
                out[split] = out.get(split, Fraction(0)) + sign * c
    return {t: c for t, c in out.items() if c}


def theta_value(a, b, c):
    """The trilinear form on dot exponents: nonzero only on {0,1,2}."""
    if sorted((a, b, c)) != [0, 1, 2]:
        return 0
    return 1 if (a, b, c) in ((0, 1, 2), (1, 2, 0), (2, 0, 1)) else -1


# --- pre-foams --------------------------------------------------------------


@dataclass
class Facet:
    genus: int
    dots: int
    slots: int


@dataclass
class PreFoam:
    name: str = ""
    facets: dict = field(default_factory=dict)  # id -> Facet
    singular: dict = field(default_factory=dict)  # id -> ((facet, slot),)*3

    def check(self):
        """Raise MalformedFoam on structural problems."""
        for fid, f in self.facets.items():
            if f.genus < 0 or f.dots < 0 or f.slots < 0:
                raise MalformedFoam(f"facet {fid} has negative data")
        used = {}
        for sid, legs in self.singular.items():
            if len(legs) != 3:
                raise MalformedFoam(
                    f"singular circle {sid} joins {len(legs)} slots, not 3")
            for fid, slot in legs:
                if fid not in self.facets:
                    raise MalformedFoam(
                        f"singular circle {sid} references missing facet {fid}")
                if not 0 <= slot < self.facets[fid].slots:
                    raise MalformedFoam(
                        f"singular circle {sid} references slot {fid}:{slot} "
                        f"out of range")
                if (fid, slot) in used:
                    raise MalformedFoam(
                        f"slot {fid}:{slot} attached to two singular circles")
                used[(fid, slot)] = sid
        return used

    def unattached_slots(self):
        used = self.check()
        return [(fid, s) for fid, f in self.facets.items()
                for s in range(f.slots) if (fid, s) not in used]

    @property
    def is_closed(self):
        return not self.unattached_slots()


def euler_characteristic(foam):
    """chi of the underlying 2-complex (singular circles carry none)."""
    return sum(2 - 2 * f.genus - f.slots for f in foam.facets.values())


def degree(foam):
    """-2 chi + 2 dots; only degree-0 pre-foams can evaluate nonzero."""
    dots = sum(f.dots for f in foam.facets.values())
    return -2 * euler_characteristic(foam) + 2 * dots


def evaluate(foam):
    """The rational value of a closed pre-foam."""
    foam.check()
    missing = foam.unattached_slots()
    if missing:
        raise NotClosed(f"slots not glued to any singular circle: {missing}")

    scalar = Fraction(1)
    tensors = []  # (facet id, {exponents: coeff})
    for fid in sorted(foam.facets):
        f = foam.facets[fid]
        core = FrobElement.x_power(f.dots)
        for _ in range(f.genus):
            core = core * handle_element()
        if f.slots == 0:
            scalar *= frob_trace(core)
            if not scalar:
                return Fraction(0)
            continue
        terms = comultiply(core, f.slots)
        if not terms:
            return Fraction(0)
        tensors.append((fid, terms))

    total = Fraction(0)
    ids = [fid for fid, _ in tensors]
    for combo in itertools.product(*(t.items() for _, t in tensors)):
        exps = {fid: split for fid, (split, _) in zip(ids, combo)}
        coeff = Fraction(1)
        for _, (_, c) in zip(ids, combo):
            coeff *= c
        for legs in foam.singular.values():
            t = theta_value(*(exps[fid][slot] for fid, slot in legs))
            if not t:
                coeff = Fraction(0)
                break
            coeff *= t
        total += coeff
    return scalar * total


def disjoint_union(f1, f2):
    """Relabels f2's ids past f1's; values multiply."""
    out = PreFoam(name=f"{f1.name}+{f2.name}".strip("+"))
    out.facets = {fid: Facet(f.genus, f.dots, f.slots)
                  for fid, f in f1.facets.items()}
    out.singular = dict(f1.singular)
    df = max(f1.facets, default=-1) + 1
    ds = max(f1.singular, default=-1) + 1
    for fid, f in f2.facets.items():
        out.facets[fid + df] = Facet(f.genus, f.dots, f.slots)
    for sid, legs in f2.singular.items():
        out.singular[sid + ds] = tuple((fid + df, slot) for fid, slot in legs)
    return out


# --- text form --------------------------------------------------------------
#
#   foam <name>
#   facet <id> genus=<g> dots=<d> slots=<k>
#   singular <id> <facet:slot> <facet:slot> <facet:slot>

_LEG = re.compile(r"^(\d+):(\d+)$")


def parse_foam(text):
    foam = PreFoam()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        try:
            if kind == "foam":
                foam.name = parts[1] if len(parts) > 1 else ""
            elif kind == "facet":
                fid = int(parts[1])
                kv = dict(p.split("=", 1) for p in parts[2:])
                foam.facets[fid] = Facet(genus=int(kv.pop("genus", 0)),
                                         dots=int(kv.pop("dots", 0)),
                                         slots=int(kv.pop("slots", 0)))
                if kv:
                    raise ValueError(f"unknown fields {sorted(kv)}")
            elif kind == "singular":
                sid = int(parts[1])
                legs = []
                for p in parts[2:]:
                    m = _LEG.match(p)
                    if not m:
                        raise ValueError(f"bad slot reference {p!r}")
                    legs.append((int(m.group(1)), int(m.group(2))))
                foam.singular[sid] = tuple(legs)
            else:
                raise ValueError(f"unknown directive {kind!r}")
        except (ValueError, IndexError) as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    try:
        foam.check()
    except MalformedFoam as exc:
        raise ParseError(exc.message) from None
    return foam


def foam_to_text(foam):
    lines = [f"foam {foam.name}".rstrip()]
    for fid in sorted(foam.facets):
        f = foam.facets[fid]
        lines.append(f"facet {fid} genus={f.genus} dots={f.dots} "
                     f"slots={f.slots}")
    for sid in sorted(foam.singular):
        legs = " ".join(f"{fid}:{slot}" for fid, slot in foam.singular[sid])
        lines.append(f"singular {sid} {legs}")
    return "\n".join(lines) + "\n"


def load_foam(path):
    with open(path, encoding="utf-8") as fh:
        return parse_foam(fh.read())


def save_foam(path, foam):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(foam_to_text(foam))
