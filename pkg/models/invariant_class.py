from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import gcd
from typing import Generator, List


@total_ordering
@dataclass(frozen=True)
class InvariantClass:
    """An element of Q/Z, stored as the reduced fraction in [0, 1)."""
    numerator: int = 0
    denominator: int = 1

    def __post_init__(self):
        if self.denominator <= 0:
            raise ValueError(f"Denominator must be positive: {self.denominator}")
        if not 0 <= self.numerator < self.denominator:
            raise ValueError(f"Numerator out of range [0, {self.denominator}): {self.numerator}")
        if gcd(self.numerator, self.denominator) != 1:
            raise ValueError(f"Fraction not reduced: {self.numerator}/{self.denominator}")

    @classmethod
    def from_fraction(cls, value: Fraction) -> "InvariantClass":
        reduced = Fraction(value) % 1
        return cls(reduced.numerator, reduced.denominator)

    @classmethod
    def of(cls, numerator: int, denominator: int = 1) -> "InvariantClass":
        """Reduce an arbitrary fraction numerator/denominator into [0, 1)."""
        return cls.from_fraction(Fraction(numerator, denominator))

    @classmethod
    def parse(cls, text: str) -> "InvariantClass":
        """
        Parse the "k/n" rendering used in JSON documents.

        Raises:
            ValueError: If the text is not a fraction.
        """
        try:
            return cls.from_fraction(Fraction(str(text).strip()))
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"Not an invariant: {text}") from e

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    @property
    def is_zero(self) -> bool:
        return self.numerator == 0

    def __lt__(self, other):
        if not isinstance(other, InvariantClass):
            return NotImplemented
        return self.as_fraction() < other.as_fraction()

    def __str__(self):
        return f"{self.numerator}/{self.denominator}"


ZERO = InvariantClass(0, 1)
HALF = InvariantClass(1, 2)


@dataclass(frozen=True)
class CyclicSubgroup:
    """The subgroup (1/order)Z/Z of Q/Z."""
    order: int

    def __post_init__(self):
        if self.order <= 0:
            raise ValueError(f"Subgroup order must be positive: {self.order}")

    def contains(self, a: InvariantClass) -> bool:
        return self.order % a.denominator == 0

    def __contains__(self, a: InvariantClass) -> bool:
        return self.contains(a)

    def elements(self) -> Generator[InvariantClass, None, None]:
        for k in range(self.order):
            yield InvariantClass.of(k, self.order)

    def is_subgroup_of(self, other: "CyclicSubgroup") -> bool:
        return other.order % self.order == 0

    def __str__(self):
        return f"(1/{self.order})Z/Z"


@dataclass(frozen=True)
class RelativeBrauerShape:
    """
    Shape of the relative Brauer group of a curve over a local field.

    The full group is (1/index)Z/Z, its degree zero part is (1/period)Z/Z and the
    Neron-Severi quotient pe*Z/ix*Z has order index/period.
    """
    period: int
    index: int
    full: CyclicSubgroup
    degree_zero: CyclicSubgroup
    ns_order: int

    def __post_init__(self):
        if self.index % self.period != 0:
            raise ValueError(f"Period {self.period} does not divide index {self.index}")
        if self.full.order != self.index or self.degree_zero.order != self.period:
            raise ValueError(f"Subgroup orders do not match (pe={self.period}, ix={self.index})")
        if self.ns_order * self.period != self.index:
            raise ValueError(f"Neron-Severi order {self.ns_order} is not index/period")

    @property
    def degree_zero_elements(self) -> List[InvariantClass]:
        return list(self.degree_zero.elements())
