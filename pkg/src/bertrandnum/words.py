"""Finite and eventually periodic words over digit alphabets.

Finite digit words are plain tuples of nonnegative ints.  Eventually
periodic infinite words pair a finite preperiod with a repeating period
(:class:`EPWord`) and are normalized so that structural equality
coincides with equality of the underlying infinite sequences.

Text syntax (used by the CLI and JSON formats): digits are written as
bare characters when every digit is at most 9, e.g. ``"110"`` for the
finite word 1.1.0 and ``"11(0)"`` for preperiod 11 followed by 0
forever; larger digits use bracketed lists, e.g. ``"[10,0,1]([2])"``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import lcm

from .errors import WordError

#: A finite word over a digit alphabet: just a tuple of nonnegative ints.
DigitWord = tuple


def digit_word(digits) -> DigitWord:
    """Coerce an iterable of ints into a validated digit tuple."""
    w = tuple(int(d) for d in digits)
    if any(d < 0 for d in w):
        raise WordError(f"digits must be nonnegative, got {w}")
    return w


def _primitive_root(p: tuple) -> tuple:
    n = len(p)
    for d in range(1, n):
        if n % d == 0 and p == p[:d] * (n // d):
            return p[:d]
    return p


@dataclass(frozen=True)
class EPWord:
    """Eventually periodic infinite word ``pre . per per per ...``.

    Canonical form: the period is primitive, and the preperiod is as
    short as possible (a trailing preperiod letter equal to the last
    period letter is absorbed by rotating the period).  A word that is
    eventually zero has period ``(0,)``; in particular the finite word
    t1..tn (with tn != 0) is stored as preperiod t1..tn, period ``(0,)``.
    """

    pre: tuple
    per: tuple

    def __post_init__(self):
        pre = tuple(int(d) for d in self.pre)
        per = tuple(int(d) for d in self.per)
        if not per:
            per = (0,)
        if any(d < 0 for d in pre + per):
            raise WordError(f"digits must be nonnegative, got {pre}({per})")
        per = _primitive_root(per)
        while pre and pre[-1] == per[-1]:
            per = (per[-1],) + per[:-1]
            pre = pre[:-1]
        object.__setattr__(self, "pre", pre)
        object.__setattr__(self, "per", per)

    # -- accessors ---------------------------------------------------------

    def digit(self, i: int) -> int:
        """The letter at (0-based) position i."""
        if i < len(self.pre):
            return self.pre[i]
        return self.per[(i - len(self.pre)) % len(self.per)]

    def prefix(self, k: int) -> DigitWord:
        return tuple(self.digit(i) for i in range(k))

    @property
    def purely_periodic(self) -> bool:
        return not self.pre

    @property
    def zero_tail(self) -> bool:
        """True when the word is eventually 0 (i.e. has finite support)."""
        return self.per == (0,)

    @property
    def support(self) -> DigitWord:
        """The digits before the all-zero tail (canonical preperiod)."""
        if not self.zero_tail:
            raise WordError(f"{self} does not end in zeros")
        return self.pre

    def shift(self, i: int) -> "EPWord":
        """Drop the first i letters."""
        if i < 0:
            raise WordError("shift offset must be nonnegative")
        if i <= len(self.pre):
            return EPWord(self.pre[i:], self.per)
        k = (i - len(self.pre)) % len(self.per)
        return EPWord((), self.per[k:] + self.per[:k])

    def __str__(self) -> str:
        return format_epword(self)

    # max digit occurring anywhere (pre may be shadowed but never exceeds
    # per once canonical, so scan both)
    @property
    def max_digit(self) -> int:
        return max(self.pre + self.per)


def epword(pre, per=(0,)) -> EPWord:
    """Convenience constructor from any digit iterables."""
    return EPWord(tuple(pre), tuple(per))


ZERO_WORD = EPWord((), (0,))


# -- lexicographic machinery -----------------------------------------------


def _as_epword(w) -> EPWord:
    # Finite words are compared against infinite ones by padding with 0^w.
    # This extends the usual order on words of a common length; the
    # convention matches how a finite expansion t1..tn is identified with
    # the infinite word t1..tn 0 0 0 ...
    return w if isinstance(w, EPWord) else EPWord(tuple(w), (0,))


def _cmp_epwords(u: EPWord, v: EPWord) -> int:
    horizon = max(len(u.pre), len(v.pre)) + lcm(len(u.per), len(v.per)) + 1
    for i in range(horizon):
        a, b = u.digit(i), v.digit(i)
        if a != b:
            return -1 if a < b else 1
    return 0


def lex_cmp(u, v) -> int:
    """Three-way lexicographic comparison; returns -1, 0 or 1.

    Finite words may only be compared with finite words of the same
    length.  Comparisons between infinite words (and the mixed case,
    where the finite word is padded with zeros) are decided exactly from
    the preperiod/period structure.
    """
    u_fin = not isinstance(u, EPWord)
    v_fin = not isinstance(v, EPWord)
    if u_fin and v_fin:
        if len(u) != len(v):
            raise WordError(
                f"cannot compare finite words of different lengths ({len(u)} vs {len(v)})"
            )
        if u == v:
            return 0
        return -1 if tuple(u) < tuple(v) else 1
    return _cmp_epwords(_as_epword(u), _as_epword(v))


def shift(w: EPWord, i: int) -> EPWord:
    """The word with its first i letters removed, in canonical form."""
    return _as_epword(w).shift(i)


def is_parry_valid(d: EPWord, strict: bool = True) -> bool:
    """Check whether every shifted copy of d stays lexicographically below d.

    ``strict=True`` demands shift(d, i) < d for all i >= 1 (the condition
    satisfied by greedy expansions of 1); ``strict=False`` allows equality
    (the condition satisfied by quasi-greedy expansions).  Only the
    finitely many distinct shifts, i up to |preperiod| + |period|, need
    to be examined; each comparison is exact.
    """
    d = _as_epword(d)
    for i in range(1, len(d.pre) + len(d.per) + 1):
        c = _cmp_epwords(d.shift(i), d)
        if c > 0 or (strict and c == 0):
            return False
    return True


def quasi_to_greedy(a: EPWord) -> EPWord:
    """Map a shift-dominated word to its strictly dominated companion.

    A purely periodic a = (a1..an)^w (n minimal) becomes
    a1..a_{n-1}(a_n + 1) followed by zeros; any other word is returned
    unchanged.  The input must satisfy is_parry_valid(a, strict=False);
    the output then satisfies the strict condition.
    """
    a = _as_epword(a)
    if not is_parry_valid(a, strict=False):
        raise WordError(f"{a} has a shifted copy lexicographically above itself")
    if not a.purely_periodic:
        return a
    p = a.per
    return EPWord(p[:-1] + (p[-1] + 1,), (0,))


# -- text syntax -------------------------------------------------------------

_COMPACT_EP = re.compile(r"^(\d*)(?:\((\d+)\))?$")
_BRACKET_EP = re.compile(r"^(\[[^\[\]]*\])?(?:\((\[[^\[\]]*\])\))?$")


def _parse_bracket_list(text: str) -> tuple:
    inner = text[1:-1].strip()
    if not inner:
        return ()
    return digit_word(int(t) for t in inner.split(","))


def parse_word(text: str) -> DigitWord:
    """Parse a finite digit word ("110", "[10,0,1]", or "ε" for empty)."""
    text = text.strip()
    if text in ("", "ε", "eps"):
        return ()
    if text.startswith("["):
        if not text.endswith("]"):
            raise WordError(f"bad word syntax: {text!r}")
        return _parse_bracket_list(text)
    if not text.isdigit():
        raise WordError(f"bad word syntax: {text!r}")
    return digit_word(int(c) for c in text)


def parse_epword(text: str) -> EPWord:
    """Parse an eventually periodic word ("11(0)", "(10)", "[10]([2])").

    A plain finite word like "110" denotes that word followed by zeros.
    """
    text = text.strip()
    if text.startswith("["):
        m = _BRACKET_EP.match(text)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise WordError(f"bad word syntax: {text!r}")
        pre = _parse_bracket_list(m.group(1)) if m.group(1) else ()
        per = _parse_bracket_list(m.group(2)) if m.group(2) else (0,)
        return EPWord(pre, per)
    m = _COMPACT_EP.match(text)
    if not m:
        raise WordError(f"bad word syntax: {text!r}")
    pre = digit_word(int(c) for c in m.group(1))
    per = digit_word(int(c) for c in m.group(2)) if m.group(2) else (0,)
    return EPWord(pre, per)


def format_word(w: DigitWord) -> str:
    if not w:
        return "ε"
    if max(w) <= 9:
        return "".join(str(d) for d in w)
    return "[" + ",".join(str(d) for d in w) + "]"


def format_epword(w: EPWord) -> str:
    if max(w.max_digit, 0) <= 9:
        pre = "".join(str(d) for d in w.pre)
        per = "".join(str(d) for d in w.per)
        return f"{pre}({per})"
    pre = "[" + ",".join(str(d) for d in w.pre) + "]" if w.pre else ""
    per = "[" + ",".join(str(d) for d in w.per) + "]"
    return f"{pre}({per})"
