"""Basic reciprocal tables grown by repeated doubling or tripling.

Each family pairs ``multiplier * generator**n`` with its reciprocal for
``n = 1..n_max``.  Only the first row is computed with :func:`reciprocal`;
later heads are multiplied by the generator and later tails divided by it,
one step at a time.
"""
from __future__ import annotations

from dataclasses import dataclass

from .regular import ReciprocalPair, reciprocal
from .sexcore import SexagesimalError, SexNumber, divide_small, scale_small

GENERATORS = (2, 3)
MULTIPLIER_BASES = (1, 3, 5)


class InvalidFamily(SexagesimalError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    generator: int
    multiplier_base: int = 1
    multiplier_exp: int = 0
    n_max: int = 30

    def __post_init__(self):
        if self.generator not in GENERATORS:
            raise InvalidFamily(f"generator must be 2 or 3, got {self.generator}")
        if self.multiplier_base not in MULTIPLIER_BASES:
            raise InvalidFamily(
                f"multiplier base must be one of {MULTIPLIER_BASES}, got {self.multiplier_base}")
        if self.multiplier_exp < 0:
            raise InvalidFamily("multiplier exponent must be non-negative")
        if self.n_max < 1:
            raise InvalidFamily("n_max must be at least 1")
        # 3**0 and 5**0 are the same multiplier as 1
        if self.multiplier_exp == 0 or self.multiplier_base == 1:
            object.__setattr__(self, "multiplier_base", 1)
            object.__setattr__(self, "multiplier_exp", 0)

    @property
    def multiplier(self):
        return self.multiplier_base ** self.multiplier_exp

    @property
    def family_id(self):
        name = f"{self.generator}^n"
        if self.multiplier_exp == 1:
            name += f"*{self.multiplier_base}"
        elif self.multiplier_exp > 1:
            name += f"*{self.multiplier_base}^{self.multiplier_exp}"
        return name

    def is_standard(self):
        """Whether the family has one of the catalogued shapes (any ``n_max``)."""
        g, b, j = self.generator, self.multiplier_base, self.multiplier_exp
        if g == 2:
            return b == 1 or (b == 3 and j <= 8) or (b == 5 and j <= 12)
        return b == 1 or (b == 5 and j == 1)


@dataclass(frozen=True)
class FamilyTable:
    spec: FamilySpec
    rows: tuple[ReciprocalPair, ...]

    def row(self, n):
        """Row ``n`` (1-based, as in the tables)."""
        if not 1 <= n <= len(self.rows):
            raise IndexError(n)
        return self.rows[n - 1]


def standard_families(n_max=30):
    """The 23 basic tables from which the large table is assembled."""
    specs = [FamilySpec(2, 3, j, n_max) for j in range(9)]
    specs += [FamilySpec(2, 5, j, n_max) for j in range(1, 13)]
    specs += [FamilySpec(3, 1, 0, n_max), FamilySpec(3, 5, 1, n_max)]
    return specs


def generate_family(spec):
    g = spec.generator
    head = SexNumber.from_int(spec.multiplier * g)
    tail = reciprocal(head)
    rows = [ReciprocalPair(head, tail, (spec.family_id, 1))]
    for n in range(2, spec.n_max + 1):
        head = scale_small(head, g)
        tail = divide_small(tail, g)
        rows.append(ReciprocalPair(head, tail, (spec.family_id, n)))
    return FamilyTable(spec, tuple(rows))


def table_one():
    """Doubling table of ``2**n * 5**3`` for ``n = 1..30``."""
    return generate_family(FamilySpec(2, 5, 3, 30))
