"""Regular (2, 3, 5-smooth) numbers and their exact reciprocals."""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .sexcore import ONE, SexagesimalError, SexNumber, ZeroOperandError, mul


class NotRegular(SexagesimalError):
    """The number has a prime factor above 5; ``cofactor`` is what remains
    after removing every factor 2, 3 and 5."""

    def __init__(self, cofactor):
        super().__init__(f"not regular: cofactor {cofactor}")
        self.cofactor = cofactor


class RegularExponents(NamedTuple):
    alpha: int
    beta: int
    gamma: int

    def value(self):
        return 2 ** self.alpha * 3 ** self.beta * 5 ** self.gamma


@dataclass(frozen=True)
class ReciprocalPair:
    head: SexNumber
    tail: SexNumber
    provenance: Optional[tuple] = None

    def __str__(self):
        return f"{self.head} {self.tail}"


def _strip_factor(n, p):
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return n, k


def factor_regular(n):
    """Exponents ``(alpha, beta, gamma)`` with ``n == 2**alpha * 3**beta * 5**gamma``.

    Raises :class:`NotRegular` if ``n`` has any other prime factor.
    """
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    n, a = _strip_factor(n, 2)
    n, b = _strip_factor(n, 3)
    n, c = _strip_factor(n, 5)
    if n != 1:
        raise NotRegular(n)
    return RegularExponents(a, b, c)


def is_regular(x):
    """True if ``x`` has a finite sexagesimal reciprocal.

    Only the digits matter; moving the point multiplies by a power of 60,
    which is itself regular.
    """
    if x.is_zero():
        raise ZeroOperandError("zero has no reciprocal")
    try:
        factor_regular(x.digit_integer())
    except NotRegular:
        return False
    return True


def reciprocal(x):
    """Exact reciprocal of a regular number, placed so that ``x * result == 1``.

    With ``x = M * 60**e`` and ``M = 2**a * 3**b * 5**c``, the smallest
    ``k`` with ``M | 60**k`` is ``max(ceil(a/2), b, c)``, and
    ``1/x = (60**k // M) * 60**(-k - e)``.
    """
    if x.is_zero():
        raise ZeroOperandError("zero has no reciprocal")
    m, e = x.scaled()
    a, b, c = factor_regular(m)
    k = max((a + 1) // 2, b, c)
    r = 2 ** (2 * k - a) * 3 ** (k - b) * 5 ** (k - c)
    return SexNumber.from_scaled(r, -k - e)


def verify_pair(pair):
    """True if ``head * tail`` is a power of 60."""
    return mul(pair.head, pair.tail).digits == ONE.digits


def make_pair(head, provenance=None):
    return ReciprocalPair(head, reciprocal(head), provenance)
