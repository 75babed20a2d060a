"""Dense univariate polynomials with exact integer/rational coefficients.

Coefficients are stored lowest degree first; the zero polynomial is the
empty tuple.  Only what the root-isolation and recurrence machinery
needs lives here: evaluation, arithmetic, gcd, square-free part, Sturm
counting and a pretty printer.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NumerationError

IntPoly = tuple


def poly(coeffs) -> IntPoly:
    """Normalize a low-first coefficient sequence (strip leading zeros)."""
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def from_high_first(coeffs) -> IntPoly:
    return poly(reversed(list(coeffs)))


def high_first(p: IntPoly) -> list:
    return list(reversed(p))


def degree(p: IntPoly) -> int:
    return len(p) - 1


def eval_at(p: IntPoly, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def sign_at(p: IntPoly, x) -> int:
    v = eval_at(p, x)
    return (v > 0) - (v < 0)


def add(p: IntPoly, q: IntPoly) -> IntPoly:
    n = max(len(p), len(q))
    return poly((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n))


def neg(p: IntPoly) -> IntPoly:
    return tuple(-c for c in p)


def sub(p: IntPoly, q: IntPoly) -> IntPoly:
    return add(p, neg(q))


def mul(p: IntPoly, q: IntPoly) -> IntPoly:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly(out)


def derivative(p: IntPoly) -> IntPoly:
    return poly(i * c for i, c in enumerate(p) if i > 0)


def _divmod_frac(p, q):
    # long division over Q; p, q low-first with Fraction-compatible coeffs
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in p]
    d = [Fraction(c) for c in q]
    quot = [Fraction(0)] * max(len(r) - len(d) + 1, 0)
    while len(r) >= len(d) and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) < len(d):
            break
        k = len(r) - len(d)
        f = r[-1] / d[-1]
        quot[k] = f
        for i, c in enumerate(d):
            r[k + i] -= f * c
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    return tuple(quot), tuple(r)


def _clear_denominators(p) -> IntPoly:
    if not p:
        return ()
    from math import gcd as igcd, lcm as ilcm

    den = 1
    for c in p:
        den = ilcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in p]
    g = 0
    for c in ints:
        g = igcd(g, abs(c))
    if g > 1:
        ints = [c // g for c in ints]
    if ints and ints[-1] < 0:
        ints = [-c for c in ints]
    return poly(ints)


def primitive(p: IntPoly) -> IntPoly:
    """Divide out the integer content; make the leading coefficient positive."""
    return _clear_denominators(p)


def gcd(p: IntPoly, q: IntPoly) -> IntPoly:
    """Primitive gcd over Q, with positive leading coefficient."""
    a = tuple(Fraction(c) for c in p)
    b = tuple(Fraction(c) for c in q)
    while b and any(b):
        _, r = _divmod_frac(a, b)
        a, b = b, r
    return _clear_denominators(a)


def exact_div(p: IntPoly, q: IntPoly) -> IntPoly:
    quot, rem = _divmod_frac(p, q)
    if rem:
        raise NumerationError("polynomial division was not exact")
    return _clear_denominators(quot)


def divides(p: IntPoly, q: IntPoly) -> bool:
    """True when p divides q over Q (up to a constant)."""
    if not p:
        return not q
    _, rem = _divmod_frac(q, p)
    return not rem


def squarefree_part(p: IntPoly) -> IntPoly:
    p = primitive(p)
    if degree(p) <= 0:
        return p
    g = gcd(p, derivative(p))
    if degree(g) <= 0:
        return p
    return exact_div(p, g)


def sturm_chain(p: IntPoly):
    chain = [tuple(Fraction(c) for c in p)]
    d = derivative(p)
    if d:
        chain.append(tuple(Fraction(c) for c in d))
        while True:
            _, r = _divmod_frac(chain[-2], chain[-1])
            if not r:
                break
            chain.append(tuple(-c for c in r))
    return chain


def _variations(values) -> int:
    signs = [(v > 0) - (v < 0) for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(p: IntPoly, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of square-free p in the interval (lo, hi].

    Requires p(lo) != 0.
    """
    chain = sturm_chain(p)
    at_lo = [eval_at(q, lo) for q in chain]
    at_hi = [eval_at(q, hi) for q in chain]
    if at_lo[0] == 0:
        raise NumerationError("lower endpoint is a root; Sturm count undefined")
    return _variations(at_lo) - _variations(at_hi)


def format_poly(p: IntPoly, var: str = "X") -> str:
    if not p:
        return "0"
    parts = []
    for k in range(degree(p), -1, -1):
        c = p[k]
        if c == 0:
            continue
        if k == 0:
            term = str(abs(c))
        else:
            mag = "" if abs(c) == 1 else str(abs(c))
            term = f"{mag}{var}" if k == 1 else f"{mag}{var}^{k}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts)


def parse_poly_high_first(text: str) -> IntPoly:
    try:
        coeffs = [int(t) for t in text.split(",")]
    except ValueError:
        raise NumerationError(f"bad polynomial coefficients: {text!r}") from None
    return from_high_first(coeffs)
