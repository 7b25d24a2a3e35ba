"""Witness-polynomial certificates about web modules.

All verdicts are read off one Laurent polynomial, the bracket of the
first web reflected against the second.  A monic witness of top degree
equal to the boundary length certifies indecomposability; a witness of
strictly smaller degree certifies two webs non-isomorphic.  Both
criteria are one-directional, so the negative outcome is always
INCONCLUSIVE, never a claim of the converse.  A pair of superficial
webs is *nice* when the appropriate one of those two shapes holds, and
`verify_key_lemma` checks niceness of every superficial pair over every
admissible boundary up to a given length.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .classify import is_non_elliptic, is_superficial
from .enumeration import admissible_sequences, enumerate_superficial_non_elliptic
from .errors import (BoundaryMismatch, IdenticalWebs, NotNonElliptic,
                     NotSuperficial)
from .laurent import LaurentPoly
from .skein import kuperberg_bracket
from .webs import SignSequence, glue

INDECOMPOSABLE = "INDECOMPOSABLE"
NOT_ISOMORPHIC = "NOT_ISOMORPHIC"
NICE = "NICE"
INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class Certificate:
    kind: str
    subjects: tuple
    witness: LaurentPoly
    boundary_length: int

    def describe(self):
        return {
            "kind": self.kind,
            "witness": str(self.witness),
            "witness_degree": (None if not self.witness
                               else self.witness.degree()),
            "boundary_length": self.boundary_length,
        }


def _require_non_elliptic(*webs):
    for w in webs:
        if not is_non_elliptic(w):
            raise NotNonElliptic("web has a circle, bigon or square face")


def certify_indecomposable(w):
    """Monic symmetric witness of degree equal to the boundary length
    certifies the web's module indecomposable; anything else is
    inconclusive."""
    _require_non_elliptic(w)
    n = len(w.signs)
    witness = kuperberg_bracket(glue(w, w))
    kind = INDECOMPOSABLE if witness.is_monic_symmetric(n) else INCONCLUSIVE
    return Certificate(kind, (w,), witness, n)


def certify_not_isomorphic(w1, w2):
    """Witness degree strictly below the boundary length certifies the
    two modules non-isomorphic; equality is inconclusive."""
    if SignSequence(w1.signs) != SignSequence(w2.signs):
        raise BoundaryMismatch(
            f"boundaries {w1.signs} and {w2.signs} do not match")
    if w1.canonical_key() == w2.canonical_key():
        raise IdenticalWebs("the two webs are the same up to isotopy")
    _require_non_elliptic(w1, w2)
    n = len(w1.signs)
    witness = kuperberg_bracket(glue(w1, w2))
    kind = NOT_ISOMORPHIC if witness.degree() < n else INCONCLUSIVE
    return Certificate(kind, (w1, w2), witness, n)


def is_nice(w1, w2):
    """(verdict, certificate) for a pair of superficial webs: equal webs
    should give a monic witness of full degree, distinct webs a witness
    of lower degree."""
    _require_non_elliptic(w1, w2)
    for w in (w1, w2):
        if not is_superficial(w):
            raise NotSuperficial("web has a nested face")
    if SignSequence(w1.signs) != SignSequence(w2.signs):
        raise BoundaryMismatch(
            f"boundaries {w1.signs} and {w2.signs} do not match")
    n = len(w1.signs)
    witness = kuperberg_bracket(glue(w1, w2))
    if w1.canonical_key() == w2.canonical_key():
        nice = witness.degree() == n and witness.coefficient(n) == 1
    else:
        nice = witness.degree() < n
    return nice, Certificate(NICE if nice else INCONCLUSIVE, (w1, w2),
                             witness, n)


def _check_sequence(args):
    signs, vertex_budget = args
    webs = enumerate_superficial_non_elliptic(signs, vertex_budget)
    pairs = 0
    nice_count = 0
    bad = []
    for w1 in webs:
        for w2 in webs:
            verdict, cert = is_nice(w1, w2)
            pairs += 1
            if verdict:
                nice_count += 1
            else:
                from .webio import web_to_text
                bad.append({"signs": str(SignSequence(signs)),
                            "w1": web_to_text(w1), "w2": web_to_text(w2),
                            "witness": str(cert.witness)})
    return len(webs), pairs, nice_count, bad


def verify_key_lemma(max_len, vertex_budget=None, jobs=1):
    """Check every superficial pair for every admissible boundary of
    length at most max_len.  Returns a report dict; counterexamples is
    expected to stay empty."""
    seqs = admissible_sequences(max_len)
    work = [(tuple(s), vertex_budget) for s in seqs]
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_check_sequence, work))
    else:
        results = [_check_sequence(item) for item in work]
    report = {
        "max_len": max_len,
        "sequences": len(seqs),
        "webs": sum(r[0] for r in results),
        "pairs": sum(r[1] for r in results),
        "nice": sum(r[2] for r in results),
        "counterexamples": [c for r in results for c in r[3]],
    }
    return report
