"""Exact positive sexagesimal numbers in floating (tablet) notation.

A :class:`SexNumber` stores base-60 digits, most significant first, and the
power of 60 carried by the leading digit.  ``digits=(1, 48), point=-2`` is
``0;0,1,48`` and ``digits=(4, 10), point=1`` is the integer ``4,10`` (250).

Only the operations needed to build reciprocal tables are provided:
multiplication, multiplication and division by 2, 3 or 5, and point shifts.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

BASE = 60
MAX_DIGITS = 64
SMALL_FACTORS = (2, 3, 5)


class SexagesimalError(ValueError):
    """Base class for errors raised by this package."""


class ParseError(SexagesimalError):
    def __init__(self, message, text, position):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


class ZeroOperandError(SexagesimalError):
    pass


class DigitOverflowError(SexagesimalError):
    pass


@total_ordering
@dataclass(frozen=True)
class SexNumber:
    """Canonical positive sexagesimal value ``sum(d[i] * 60**(point - i))``.

    Use :meth:`from_parts` to build from arbitrary (non-canonical) digits;
    the plain constructor insists on canonical form.
    """

    digits: tuple[int, ...]
    point: int = 0

    def __post_init__(self):
        digits = tuple(self.digits)
        object.__setattr__(self, "digits", digits)
        if len(digits) > MAX_DIGITS:
            raise DigitOverflowError(
                f"{len(digits)} sexagesimal places exceed the cap of {MAX_DIGITS}")
        for d in digits:
            if not isinstance(d, int) or not 0 <= d < BASE:
                raise SexagesimalError(f"invalid sexagesimal digit {d!r}")
        if not digits:
            if self.point != 0:
                raise SexagesimalError("zero must have point 0")
        elif digits[0] == 0 or digits[-1] == 0:
            raise SexagesimalError(f"non-canonical digits {digits}")

    @classmethod
    def from_parts(cls, digits, point=0):
        """Canonicalize ``digits``/``point`` by stripping zero places."""
        digits = list(digits)
        lead = 0
        while lead < len(digits) and digits[lead] == 0:
            lead += 1
        if lead == len(digits):
            return ZERO
        end = len(digits)
        while digits[end - 1] == 0:
            end -= 1
        return cls(tuple(digits[lead:end]), point - lead)

    @classmethod
    def from_int(cls, n):
        if n < 0:
            raise SexagesimalError("negative numbers are not supported")
        return cls.from_scaled(n, 0)

    @classmethod
    def from_scaled(cls, mantissa, exponent):
        """Build ``mantissa * 60**exponent`` from a non-negative integer."""
        if mantissa == 0:
            return ZERO
        out = []
        while mantissa:
            mantissa, r = divmod(mantissa, BASE)
            out.append(r)
        out.reverse()
        return cls.from_parts(out, len(out) - 1 + exponent)

    def is_zero(self):
        return not self.digits

    def scaled(self):
        """Exact integer view: ``(M, e)`` with value ``M * 60**e``."""
        m = 0
        for d in self.digits:
            m = m * BASE + d
        return m, self.point - len(self.digits) + 1

    def digit_integer(self):
        return self.scaled()[0]

    def to_fraction(self):
        m, e = self.scaled()
        return Fraction(m) * Fraction(BASE) ** e

    def is_integer(self):
        return self.point >= len(self.digits) - 1

    def __str__(self):
        return format_number(self)

    def __repr__(self):
        return f"SexNumber({format_number(self)!r})"

    def __lt__(self, other):
        if not isinstance(other, SexNumber):
            return NotImplemented
        return compare(self, other) < 0

    def __mul__(self, other):
        if not isinstance(other, SexNumber):
            return NotImplemented
        return mul(self, other)


ZERO = SexNumber(())
ONE = SexNumber((1,))

_GROUP = re.compile(r"\d+")


def _parse_groups(text, start, chunk):
    groups = []
    pos = start
    for piece in chunk.split(","):
        if not _GROUP.fullmatch(piece):
            raise ParseError(f"malformed digit group {piece!r}", text, pos)
        value = int(piece)
        if value >= BASE:
            raise ParseError(f"digit group {value} is not below 60", text, pos)
        groups.append(value)
        pos += len(piece) + 1
    return groups


def parse(text):
    """Read transliteration such as ``"1;0,45"`` or ``"4,10"``.

    Without a ``;`` the groups form a whole number.  Zero padding is
    accepted and removed.  An all-zero input yields :data:`ZERO`.
    """
    stripped = text.strip()
    offset = text.find(stripped) if stripped else 0
    if not stripped:
        raise ParseError("empty number", text, 0)
    if stripped.count(";") > 1:
        raise ParseError("more than one ';'", text, offset + stripped.rindex(";"))
    whole, sep, frac = stripped.partition(";")
    digits = _parse_groups(text, offset, whole)
    point = len(digits) - 1
    if sep:
        digits += _parse_groups(text, offset + len(whole) + 1, frac)
    return SexNumber.from_parts(digits, point)


def format_number(x, style="pointed"):
    """Render ``x`` as ``"a,b;c,d"`` (pointed) or ``"a,b"`` (integer)."""
    if style not in ("pointed", "integer"):
        raise ValueError(f"unknown style {style!r}")
    if x.is_zero():
        return "0"
    digits = list(x.digits)
    n = len(digits)
    if style == "integer" and not x.is_integer():
        raise SexagesimalError(f"{format_number(x)} is not a whole number")
    if x.point >= n - 1:
        whole, frac = digits + [0] * (x.point - n + 1), []
    elif x.point < 0:
        whole, frac = [0], [0] * (-x.point - 1) + digits
    else:
        whole, frac = digits[: x.point + 1], digits[x.point + 1:]
    out = ",".join(map(str, whole))
    if frac:
        out += ";" + ",".join(map(str, frac))
    return out


def compare(a, b):
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    if a.is_zero() or b.is_zero():
        return (not a.is_zero()) - (not b.is_zero())
    if a.point != b.point:
        return 1 if a.point > b.point else -1
    n = max(len(a.digits), len(b.digits))
    da = a.digits + (0,) * (n - len(a.digits))
    db = b.digits + (0,) * (n - len(b.digits))
    return (da > db) - (da < db)


def _require_nonzero(*xs):
    for x in xs:
        if x.is_zero():
            raise ZeroOperandError("arithmetic on zero is not supported")


def mul(a, b):
    """Exact product by schoolbook multiplication on base-60 digits."""
    _require_nonzero(a, b)
    la, lb = len(a.digits), len(b.digits)
    # acc[k] collects digit products of weight 60**(la + lb - 2 - k)
    acc = [0] * (la + lb - 1)
    for i, da in enumerate(a.digits):
        for j, db in enumerate(b.digits):
            acc[i + j] += da * db
    out = []
    carry = 0
    for v in reversed(acc):
        carry, d = divmod(v + carry, BASE)
        out.append(d)
    while carry:
        carry, d = divmod(carry, BASE)
        out.append(d)
    out.reverse()
    lowest = (a.point - la + 1) + (b.point - lb + 1)
    return SexNumber.from_parts(out, lowest + len(out) - 1)


def _check_factor(f):
    if f not in SMALL_FACTORS:
        raise ValueError(f"factor must be one of {SMALL_FACTORS}, got {f!r}")


def scale_small(x, f):
    """Multiply by 2, 3 or 5 with a right-to-left carry."""
    _check_factor(f)
    _require_nonzero(x)
    out = []
    carry = 0
    for d in reversed(x.digits):
        carry, r = divmod(d * f + carry, BASE)
        out.append(r)
    point = x.point
    if carry:
        out.append(carry)
        point += 1
    out.reverse()
    return SexNumber.from_parts(out, point)


def divide_small(x, f):
    """Divide by 2, 3 or 5 left to right, carrying ``remainder * 60`` onward.

    Since ``f`` divides 60, one extra place always absorbs the last remainder.
    """
    _check_factor(f)
    _require_nonzero(x)
    out = []
    rem = 0
    for d in x.digits:
        q, rem = divmod(rem * BASE + d, f)
        out.append(q)
    if rem:
        out.append(rem * BASE // f)
    return SexNumber.from_parts(out, x.point)


def double(x):
    return scale_small(x, 2)


def triple(x):
    return scale_small(x, 3)


def halve(x):
    return divide_small(x, 2)


def third(x):
    return divide_small(x, 3)


def shift_point(x, k):
    """Multiply by ``60**k``; the digits stay as they are."""
    _require_nonzero(x)
    return SexNumber(x.digits, x.point + k)


def normalize_mantissa(x):
    """Return ``(v, shift)`` with ``1 <= v < 60`` and ``x == shift_point(v, shift)``."""
    _require_nonzero(x)
    return SexNumber(x.digits, 0), x.point
