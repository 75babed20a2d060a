"""Exactly represented real bases beta > 1 and the greedy expansion of 1.

A base is an integer, a rational, or the unique root > 1 of an integer
polynomial inside an isolating interval.  Digits of the expansion of 1
are produced by exact arithmetic only: rational remainders for
integer/rational bases, and elements of Q(beta) (coefficient vectors
reduced modulo the defining polynomial) for algebraic bases, with floor
extraction certified by sign evaluations over a shrinking isolating
interval.  No floating point ever enters the digit path.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from . import polynomials as pl
from .errors import NumerationError, RefinementBudgetError, UnresolvedBaseError
from .intervals import Interval
from .words import (
    DigitWord,
    EPWord,
    epword,
    format_epword,
    is_parry_valid,
    parse_epword,
)

DEFAULT_DEPTH = 64
REFINEMENT_BUDGET = 256  # bisections allowed per floor extraction


@dataclass(frozen=True)
class ParryClass:
    """Resolution status of the expansion of 1.

    kind is "simple" (finite expansion t1..tn, witness holds the full
    word, n = len of support), "nonsimple" (infinite ultimately periodic,
    m/n are the canonical preperiod/period lengths) or "unresolved"
    (no repetition seen within `depth` digits; witness is the prefix).
    """

    kind: str
    word: object  # EPWord when resolved, digit tuple when unresolved
    n: int | None = None
    m: int | None = None
    depth: int | None = None

    @property
    def resolved(self) -> bool:
        return self.kind != "unresolved"

    def describe(self) -> str:
        if self.kind == "simple":
            return f"simple Parry, n={self.n}"
        if self.kind == "nonsimple":
            return f"non-simple Parry, m={self.m}, n={self.n}"
        return f"unresolved at depth {self.depth}"


class RealBase:
    """A real base beta > 1 with a lazily extended expansion of 1.

    The digit cache and the isolating interval only ever grow/shrink
    monotonically toward the same answers, so concurrent readers are
    safe as long as a single writer performs the extension.
    """

    def __init__(self, kind, *, value=None, coeffs=None, interval=None, source=None):
        self.kind = kind  # "integer" | "rational" | "algebraic"
        self.value = value  # exact Fraction for integer/rational kinds
        self.poly = coeffs  # low-first int tuple for algebraic kind
        self._ival = list(interval) if interval else None  # mutable enclosure
        self.source = source  # textual spec this base was parsed from
        self._digits: list[int] = []
        self._rem = None  # remainder after the digits computed so far
        self._seen: dict = {}
        self._resolved: EPWord | None = None
        self._repeat_at: int | None = None  # index where the remainder repeated

    # -- constructors --------------------------------------------------------

    @classmethod
    def integer(cls, b: int) -> "RealBase":
        b = int(b)
        if b < 2:
            raise NumerationError(f"integer base must be >= 2, got {b}")
        return cls("integer", value=Fraction(b), source=f"int:{b}")

    @classmethod
    def rational(cls, q) -> "RealBase":
        q = Fraction(q)
        if q <= 1:
            raise NumerationError(f"base must be > 1, got {q}")
        if q.denominator == 1:
            return cls.integer(q.numerator)
        return cls("rational", value=q, source=f"rat:{q.numerator}/{q.denominator}")

    @classmethod
    def algebraic(cls, coeffs, interval) -> "RealBase":
        """Root > 1 of the polynomial (low-first coeffs) isolated by `interval`.

        The polynomial is replaced by its primitive square-free part; the
        interval must contain exactly one of its roots, and that root must
        exceed 1.
        """
        p = pl.squarefree_part(pl.poly(coeffs))
        if pl.degree(p) < 1:
            raise NumerationError("polynomial must be nonconstant")
        lo, hi = Fraction(interval[0]), Fraction(interval[1])
        if lo >= hi:
            raise NumerationError(f"bad isolating interval ({lo}, {hi})")
        if pl.sign_at(p, lo) == 0 or pl.sign_at(p, hi) == 0:
            raise NumerationError("isolating interval endpoints must not be roots")
        if pl.count_roots(p, lo, hi) != 1:
            raise NumerationError("interval does not isolate exactly one root")
        if pl.sign_at(p, lo) * pl.sign_at(p, hi) > 0:
            # one root of the square-free part always flips the sign
            raise NumerationError("interval does not isolate exactly one root")
        # push the lower endpoint above 1
        if hi <= 1:
            raise NumerationError("isolated root is not > 1")
        if lo < 1:
            s1 = pl.sign_at(p, Fraction(1))
            if s1 == 0 or s1 == pl.sign_at(p, hi):
                raise NumerationError("isolated root is not > 1")
            lo = Fraction(1)
        if pl.degree(p) == 1:
            # linear polynomial: the root is exactly rational
            root = Fraction(-p[0], p[1])
            if root <= 1:
                raise NumerationError("isolated root is not > 1")
            return cls.rational(root)
        text = ",".join(str(c) for c in pl.high_first(p))
        base = cls(
            "algebraic",
            coeffs=p,
            interval=(lo, hi),
            source=f"poly:{text}@({lo},{hi})",
        )
        return base

    @classmethod
    def from_parry_word(cls, word: EPWord | str) -> "RealBase":
        if isinstance(word, str):
            word = parse_epword(word)
        base = base_from_expansion(word)
        base.source = f"parry:{format_epword(word)}"
        return base

    # -- enclosure and integer parts ------------------------------------------

    def enclosure(self, width=None) -> Interval:
        """A rigorous interval containing beta, refined below `width` if given."""
        if self.kind != "algebraic":
            return Interval.point(self.value)
        if width is not None:
            width = Fraction(width)
            while self._ival[1] - self._ival[0] >= width:
                self._bisect()
        return Interval(self._ival[0], self._ival[1])

    def _bisect(self):
        lo, hi = self._ival
        mid = (lo + hi) / 2
        s = pl.sign_at(self.poly, mid)
        if s == 0:
            # the root is exactly rational: collapse to a degenerate enclosure
            self._ival[0] = self._ival[1] = mid
            return
        if s == pl.sign_at(self.poly, lo):
            self._ival[0] = mid
        else:
            self._ival[1] = mid

    @property
    def floor(self) -> int:
        """The integer part of beta."""
        if self.kind != "algebraic":
            return math.floor(self.value)
        for _ in range(REFINEMENT_BUDGET):
            lo, hi = self._ival
            if lo == hi:
                return math.floor(lo)
            if math.floor(lo) == math.floor(hi):
                return math.floor(lo)
            f = math.floor(hi)
            if lo < f < hi and pl.sign_at(self.poly, Fraction(f)) == 0:
                # beta is exactly the integer f
                self._ival[0] = self._ival[1] = Fraction(f)
                return f
            self._bisect()
        raise RefinementBudgetError("could not determine the integer part of beta")

    @property
    def ceil_minus_one(self) -> int:
        if self.kind == "integer":
            return int(self.value) - 1
        if self.kind == "rational":
            return math.ceil(self.value) - 1
        fl = self.floor
        lo, hi = self._ival
        if lo == hi and lo == fl:
            return fl - 1
        return fl  # beta is not an integer, so ceil(beta) - 1 == floor(beta)

    def approx(self, digits: int = 12) -> float:
        return float(self.enclosure(Fraction(1, 10**digits)).mid)

    # -- the greedy expansion of 1 ---------------------------------------------

    def _init_remainder(self):
        if self.kind == "algebraic":
            n = pl.degree(self.poly)
            return (Fraction(1),) + (Fraction(0),) * (n - 1)
        return Fraction(1)

    def _mul_beta(self, vec):
        # multiply an element of Q(beta), given as a coefficient vector of
        # degree < n, by beta and reduce via beta^n = -(p_0 + ... )/p_n
        p = self.poly
        n = pl.degree(p)
        lead = p[n]
        top = vec[n - 1]
        out = []
        for j in range(n):
            c = vec[j - 1] if j >= 1 else Fraction(0)
            if top:
                c = c - top * Fraction(p[j], lead)
            out.append(c)
        return tuple(out)

    def _eval_interval(self, vec) -> Interval:
        acc = Interval.point(0)
        beta = Interval(self._ival[0], self._ival[1])
        for c in reversed(vec):
            acc = acc * beta + c
        return acc

    def _is_exactly(self, vec, m: int) -> bool:
        # decide vec(beta) == m by locating a common root of the defining
        # polynomial and vec - m inside the isolating interval
        diff = list(vec)
        diff[0] -= m
        c = pl.primitive(diff)
        if not c:
            return True
        g = pl.gcd(self.poly, c)
        if pl.degree(g) < 1:
            return False
        lo, hi = self._ival
        return pl.sign_at(g, lo) * pl.sign_at(g, hi) < 0

    def _floor_vec(self, vec) -> tuple[int, bool]:
        """Floor of an element of Q(beta); returns (floor, is_exact_integer)."""
        if all(c == 0 for c in vec[1:]):
            v = vec[0]
            return math.floor(v), v.denominator == 1
        for _ in range(REFINEMENT_BUDGET):
            enc = self._eval_interval(vec)
            flo, fhi = math.floor(enc.lo), math.floor(enc.hi)
            if flo == fhi:
                return flo, False
            if fhi == flo + 1 and self._is_exactly(vec, fhi):
                return fhi, True
            self._bisect()
        raise RefinementBudgetError(
            "interval refinement did not separate a floor boundary"
        )

    def _step(self):
        """Compute one more digit of the expansion of 1."""
        if self._rem is None:
            self._rem = self._init_remainder()
            self._seen[self._rem] = 0
        if self.kind == "algebraic":
            s = self._mul_beta(self._rem)
            e, exact = self._floor_vec(s)
            if exact:
                rem = None  # remainder is exactly zero
            else:
                rem = list(s)
                rem[0] -= e
                rem = tuple(rem)
                if all(c == 0 for c in rem):
                    rem = None
        else:
            s = self.value * self._rem
            e = math.floor(s)
            rem = s - e
            if rem == 0:
                rem = None
        if e < 0:
            raise NumerationError("negative digit; base is not > 1")
        self._digits.append(e)
        k = len(self._digits)
        if rem is None:
            self._resolved = epword(tuple(self._digits), (0,))
            self._rem = Fraction(0)
            return
        j = self._seen.get(rem)
        if j is not None:
            self._resolved = epword(tuple(self._digits[:j]), tuple(self._digits[j:]))
            self._repeat_at = j
            self._rem = rem
            return
        self._seen[rem] = k
        self._rem = rem

    def digits_prefix(self, depth: int) -> DigitWord:
        """The first `depth` digits of the expansion of 1 (always available)."""
        if self._resolved is not None:
            return self._resolved.prefix(depth)
        while len(self._digits) < depth and self._resolved is None:
            self._step()
        if self._resolved is not None:
            return self._resolved.prefix(depth)
        return tuple(self._digits[:depth])

    def parry_class(self, depth: int = DEFAULT_DEPTH) -> ParryClass:
        """Resolve the expansion of 1 within `depth` digits, if possible.

        A repeated exact remainder proves ultimate periodicity; a zero
        remainder proves finiteness.  Absence of both within `depth` only
        yields "unresolved" (never a claim that beta is not Parry).
        """
        self.digits_prefix(depth)
        w = self._resolved
        if w is None:
            return ParryClass("unresolved", tuple(self._digits[:depth]), depth=depth)
        if w.zero_tail:
            return ParryClass("simple", w, n=len(w.support))
        return ParryClass("nonsimple", w, m=len(w.pre), n=len(w.per))

    def expansion_of_one(self, depth: int = DEFAULT_DEPTH):
        """Greedy expansion of 1: an EPWord if resolved within `depth`, else
        the digit prefix of length `depth`."""
        if depth < 1:
            raise NumerationError("depth must be >= 1")
        cls = self.parry_class(depth)
        return cls.word

    def quasi_greedy_expansion(self, depth: int = DEFAULT_DEPTH):
        """Quasi-greedy expansion of 1.

        Equals the greedy expansion unless that expansion is finite,
        t1..tn followed by zeros, in which case it is the purely periodic
        word (t1..t_{n-1}(t_n - 1))^w.  For an unresolved base the digit
        prefix is returned; it is a correct prefix of the quasi-greedy
        word in either outcome.
        """
        if depth < 1:
            raise NumerationError("depth must be >= 1")
        cls = self.parry_class(depth)
        if not cls.resolved:
            return cls.word
        return quasi_greedy_of(cls.word)

    def dstar_prefix(self, depth: int) -> DigitWord:
        cls = self.parry_class(depth)
        if not cls.resolved:
            return tuple(cls.word)
        return quasi_greedy_of(cls.word).prefix(depth)

    def require_parry(self, depth: int = DEFAULT_DEPTH) -> EPWord:
        cls = self.parry_class(depth)
        if not cls.resolved:
            raise UnresolvedBaseError(
                f"expansion of 1 for {self} not resolved within depth {depth}"
            )
        return cls.word

    def __repr__(self):
        return f"RealBase({self.source or self.kind})"


def quasi_greedy_of(d: EPWord) -> EPWord:
    """The quasi-greedy companion of a resolved greedy expansion of 1."""
    if not d.zero_tail:
        return d
    t = d.support
    if not t:
        raise NumerationError("expansion of 1 cannot be all zeros")
    return epword((), t[:-1] + (t[-1] - 1,))


def base_from_expansion(d: EPWord) -> RealBase:
    """Recover the unique base beta > 1 whose greedy expansion of 1 is d.

    d must be strictly shift-dominated, distinct from 10^w, and start
    with a nonzero digit.  The defining polynomial is X^n - sum t_j
    X^{n-j} when d = t1..tn followed by zeros, and otherwise, writing d
    with preperiod length m and period length n,
    (X^{m+n} - sum_{j<=m+n} d_j X^{m+n-j}) - (X^m - sum_{j<=m} d_j X^{m-j}).
    That polynomial has exactly one root > 1, which is beta.
    """
    if not isinstance(d, EPWord):
        d = epword(tuple(d), (0,))
    if d.digit(0) < 1:
        raise NumerationError(f"expansion must start with a nonzero digit: {d}")
    if d == epword((1,), (0,)):
        raise NumerationError("10^w corresponds to the degenerate base 1")
    if not is_parry_valid(d, strict=True):
        raise NumerationError(f"{d} is not a valid greedy expansion of 1")
    if d.zero_tail:
        p = simple_expansion_polynomial(d.support)
    else:
        p = expansion_polynomial(d)
    if pl.degree(p) == 1:
        return RealBase.rational(Fraction(-p[0], p[1]))
    # isolate the unique root > 1: the polynomial is negative at 1 and
    # eventually positive
    lo = Fraction(1)
    if pl.sign_at(p, lo) >= 0:
        raise NumerationError(f"no base > 1 realizes {d}")
    hi = Fraction(d.digit(0) + 2)
    while pl.sign_at(p, hi) <= 0:
        hi *= 2
    base = RealBase.algebraic(p, (lo, hi))
    return base


def expansion_polynomial(d: EPWord) -> pl.IntPoly:
    """The recurrence polynomial attached to the decomposition of d."""
    m, n = len(d.pre), len(d.per)
    digits = d.pre + d.per
    coeffs = [0] * (m + n + 1)
    coeffs[m + n] += 1
    for j in range(1, m + n + 1):
        coeffs[m + n - j] -= digits[j - 1]
    coeffs[m] -= 1
    for j in range(1, m + 1):
        coeffs[m - j] += digits[j - 1]
    return pl.poly(coeffs)


def simple_expansion_polynomial(support) -> pl.IntPoly:
    """X^n - sum t_j X^{n-j} for a finite expansion of 1 with digits t."""
    t = tuple(support)
    n = len(t)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    for j in range(1, n + 1):
        coeffs[n - j] -= t[j - 1]
    return pl.poly(coeffs)


def shift_member(base: RealBase, w: DigitWord, variant: str, depth: int | None = None) -> bool:
    """Membership of a finite word in the factor language of the base's shift.

    variant "canonical" checks against prefixes of the quasi-greedy
    expansion of 1; "noncanonical" against the greedy expansion.  A word
    is a factor exactly when each of its suffixes is lexicographically at
    most the same-length prefix of the reference word.
    """
    _check_variant(variant)
    w = tuple(w)
    need = max(len(w), depth or 0, 1)
    ref = base.dstar_prefix(need) if variant == "canonical" else base.digits_prefix(need)
    for i in range(1, len(w) + 1):
        if w[len(w) - i :] > ref[:i]:
            return False
    return True


def _check_variant(variant: str):
    if variant not in ("canonical", "noncanonical"):
        raise NumerationError(f"unknown variant {variant!r}")


# -- textual base specs -------------------------------------------------------

_POLY_SPEC = re.compile(r"^poly:([-\d,]+)@\(([^,]+),([^)]+)\)$")


def parse_base(text: str) -> RealBase:
    """Parse "int:3", "rat:5/2", "poly:1,-1,-1@(1,2)" or "parry:11(0)"."""
    text = text.strip()
    if text.startswith("int:"):
        try:
            return RealBase.integer(int(text[4:]))
        except ValueError:
            raise NumerationError(f"bad integer base: {text!r}") from None
    if text.startswith("rat:"):
        try:
            return RealBase.rational(Fraction(text[4:]))
        except (ValueError, ZeroDivisionError):
            raise NumerationError(f"bad rational base: {text!r}") from None
    if text.startswith("poly:"):
        m = _POLY_SPEC.match(text)
        if not m:
            raise NumerationError(f"bad polynomial base syntax: {text!r}")
        coeffs = pl.parse_poly_high_first(m.group(1))
        try:
            lo, hi = Fraction(m.group(2)), Fraction(m.group(3))
        except (ValueError, ZeroDivisionError):
            raise NumerationError(f"bad isolating interval in {text!r}") from None
        return RealBase.algebraic(coeffs, (lo, hi))
    if text.startswith("parry:"):
        return RealBase.from_parry_word(text[6:])
    raise NumerationError(f"unknown base syntax: {text!r}")
