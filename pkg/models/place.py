from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from utils.number_theory import require_prime


class PlaceKind(Enum):
    REAL = "real"
    FINITE = "finite"


@dataclass(frozen=True)
class Place:
    kind: PlaceKind
    p: Optional[int] = None

    def __post_init__(self):
        if self.kind == PlaceKind.FINITE:
            require_prime(self.p)
        elif self.p is not None:
            raise ValueError(f"The real place carries no prime: {self.p}")

    @classmethod
    def real(cls) -> "Place":
        return cls(PlaceKind.REAL)

    @classmethod
    def finite(cls, p: int) -> "Place":
        return cls(PlaceKind.FINITE, p)

    @classmethod
    def parse(cls, text: str) -> "Place":
        """
        Parse "real" (also "inf") or a prime written in decimal.

        Raises:
            ValueError: If the text names neither.
        """
        value = str(text).strip().lower()
        if value in ("real", "inf", "infinity"):
            return cls.real()
        try:
            return cls.finite(int(value))
        except ValueError as e:
            raise ValueError(f"Unknown place: {text}") from e

    @property
    def is_real(self) -> bool:
        return self.kind == PlaceKind.REAL

    def sort_key(self) -> Tuple[int, int]:
        """Real place first, then finite places by ascending prime."""
        return (0, 0) if self.is_real else (1, self.p)

    def __lt__(self, other: "Place") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return "real" if self.is_real else str(self.p)


@dataclass(frozen=True)
class QuaternionSymbol:
    """The pair (a, b) naming the quaternion algebra and the conic z^2 = a x^2 + b y^2."""
    a: int
    b: int

    def __post_init__(self):
        if self.a == 0 or self.b == 0:
            raise ValueError(f"Quaternion symbol entries must be nonzero: ({self.a}, {self.b})")

    def swapped(self) -> "QuaternionSymbol":
        return QuaternionSymbol(self.b, self.a)

    def __str__(self):
        return f"({self.a},{self.b})"
