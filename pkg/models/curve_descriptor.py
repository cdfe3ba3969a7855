from dataclasses import dataclass
from typing import Union

from models.place import QuaternionSymbol
from models.special_fibre import SpecialFibre
from utils.number_theory import require_prime


@dataclass(frozen=True)
class DiagonalForm:
    """The plane curve X^2n - a Y^2n - b Z^2n = 0 over Q, mapping to its conic by coordinate powers."""
    n: int
    a: int
    b: int

    kind = "diagonal"

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"Diagonal form needs n >= 1, got {self.n}")
        if self.a == 0 or self.b == 0:
            raise ValueError(f"Coefficients must be nonzero for a smooth curve: a={self.a}, b={self.b}")

    @property
    def symbol(self) -> QuaternionSymbol:
        return QuaternionSymbol(self.a, self.b)

    def swapped(self) -> "DiagonalForm":
        return DiagonalForm(self.n, self.b, self.a)


@dataclass(frozen=True)
class ConicCover:
    """A branched cover of the conic X^2 - a Y^2 - b Z^2 = 0 with the stated degree and genus."""
    a: int
    b: int
    cover_degree: int
    genus: int

    kind = "cover"

    def __post_init__(self):
        if self.a == 0 or self.b == 0:
            raise ValueError(f"Coefficients must be nonzero: a={self.a}, b={self.b}")
        if self.cover_degree < 1 or self.genus < 1:
            raise ValueError(f"Cover degree and genus must be positive: degree={self.cover_degree}, genus={self.genus}")

    @property
    def symbol(self) -> QuaternionSymbol:
        return QuaternionSymbol(self.a, self.b)


@dataclass(frozen=True)
class ModelCurve:
    """A curve known through the special fibre of a regular model at a single place."""
    genus: int
    place_prime: int
    fibre: SpecialFibre

    kind = "model"

    def __post_init__(self):
        if self.genus < 1:
            raise ValueError(f"Genus must be positive: {self.genus}")
        require_prime(self.place_prime)


CurveDescriptor = Union[DiagonalForm, ConicCover, ModelCurve]
