"""Laurent polynomials in one variable q with integer coefficients.

A polynomial is stored as a dict {exponent: coefficient} with zero
coefficients trimmed, wrapped in a small immutable class.  That is all the
skein calculus needs: addition, multiplication, q-power shifts, degree
queries, and an exact text round-trip ("2*q^3 - q + 5 - 2*q^-4").

The degree of the zero polynomial is NEG_INFINITY (float("-inf")) so that
degree comparisons like degree(p) < l always make sense.
"""

from __future__ import annotations

import re

NEG_INFINITY = float("-inf")


class LaurentPoly:
    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=None):
        """coeffs: mapping or iterable of (exponent, coefficient) pairs."""
        d = {}
        if coeffs:
            items = coeffs.items() if hasattr(coeffs, "items") else coeffs
            for e, c in items:
                if c:
                    d[int(e)] = d.get(int(e), 0) + int(c)
                    if not d[int(e)]:
                        del d[int(e)]
        self.coeffs = d
        self._hash = None

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero():
        return LaurentPoly()

    @staticmethod
    def one():
        return LaurentPoly({0: 1})

    @staticmethod
    def q_power(k, coeff=1):
        return LaurentPoly({k: coeff})

    # -- ring structure ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        d = dict(self.coeffs)
        for e, c in other.coeffs.items():
            d[e] = d.get(e, 0) + c
            if not d[e]:
                del d[e]
        out = LaurentPoly()
        out.coeffs = d
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentPoly()
        out.coeffs = {e: -c for e, c in self.coeffs.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly()
            out = LaurentPoly()
            out.coeffs = {e: c * other for e, c in self.coeffs.items()}
            return out
        d = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                d[e] = d.get(e, 0) + c1 * c2
                if not d[e]:
                    del d[e]
        out = LaurentPoly()
        out.coeffs = d
        return out

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.coeffs.items()))
        return self._hash

    def __bool__(self):
        return bool(self.coeffs)

    # -- queries ----------------------------------------------------------

    def degree(self):
        """Largest exponent with nonzero coefficient; NEG_INFINITY if zero."""
        return max(self.coeffs) if self.coeffs else NEG_INFINITY

    def min_degree(self):
        return min(self.coeffs) if self.coeffs else NEG_INFINITY

    def coefficient(self, k):
        return self.coeffs.get(k, 0)

    def shift(self, k):
        """Multiply by q^k."""
        out = LaurentPoly()
        out.coeffs = {e + k: c for e, c in self.coeffs.items()}
        return out

    def is_symmetric(self):
        """True iff p(q) == p(q^-1)."""
        return all(self.coeffs.get(-e, 0) == c for e, c in self.coeffs.items())

    def is_nonnegative(self):
        return all(c >= 0 for c in self.coeffs.values())

    def is_monic_symmetric(self, d):
        """True iff symmetric, of degree exactly d, with leading coefficient 1."""
        return self.is_symmetric() and self.degree() == d and self.coefficient(d) == 1

    def coefficient_list(self):
        """[(exponent, coefficient)] sorted by descending exponent."""
        return sorted(self.coeffs.items(), key=lambda t: -t[0])

    # -- text form ----------------------------------------------------------
    #
    # Descending exponents, "*" between coefficient and q, "^" before the
    # exponent, coefficient 1 left implicit except in the constant term:
    #     q^2 + 2 + q^-2        3*q - 3*q^-1        -q^4 + 5        0

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in self.coefficient_list():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                qpart = "q" if e == 1 else f"q^{e}"
                body = qpart if mag == 1 else f"{mag}*{qpart}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self.coeffs!r})"


_TERM_RE = re.compile(
    r"""^(?P<coeff>\d+)?          # optional magnitude
         (?P<star>\*)?            # optional separator
         (?P<q>q(\^(?P<exp>-?\d+))?)?$""",
    re.VERBOSE,
)


def parse_poly(text):
    """Inverse of str(LaurentPoly): accepts exactly the rendered grammar.

    Raises ValueError on anything else (unknown symbols, empty terms,
    a '*' without both sides, ...).
    """
    s = text.strip()
    if s == "0":
        return LaurentPoly.zero()
    if not s:
        raise ValueError("empty polynomial text")
    # Split into signed terms: a leading sign, then "+"/"-" separators.
    # A "-" straight after "^" is an exponent sign, not a separator.
    tokens = re.split(r"\s*(?<!\^)([+-])\s*", s)
    if tokens[0] == "":
        tokens = tokens[1:]
    else:
        tokens = ["+"] + tokens
    if len(tokens) % 2 or any(t == "" for t in tokens):
        raise ValueError(f"cannot parse polynomial: {text!r}")
    coeffs = {}
    for sign, term in zip(tokens[::2], tokens[1::2]):
        m = _TERM_RE.match(term)
        if not m or (m.group("coeff") is None and m.group("q") is None):
            raise ValueError(f"cannot parse term {term!r} in {text!r}")
        if m.group("star") and (m.group("coeff") is None or m.group("q") is None):
            raise ValueError(f"cannot parse term {term!r} in {text!r}")
        mag = int(m.group("coeff")) if m.group("coeff") is not None else 1
        if m.group("q") is None:
            exp = 0
        elif m.group("exp") is None:
            exp = 1
        else:
            exp = int(m.group("exp"))
        c = mag if sign == "+" else -mag
        coeffs[exp] = coeffs.get(exp, 0) + c
    return LaurentPoly(coeffs)


def quantum_int(n):
    """The quantum integer [n] = q^(n-1) + q^(n-3) + ... + q^(1-n).

    [0] = 0, [1] = 1, [2] = q + q^-1, [3] = q^2 + 1 + q^-2, [-n] = -[n].
    """
    if n < 0:
        return -quantum_int(-n)
    return LaurentPoly({k: 1 for k in range(n - 1, -n, -2)})
