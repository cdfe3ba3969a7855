from dataclasses import dataclass, field
from typing import List

from utils.number_theory import require_prime


@dataclass(frozen=True, order=True)
class PITriple:
    """Genus, period and index of a curve."""
    g: int
    pe: int
    ix: int

    def __post_init__(self):
        if self.g < 0:
            raise ValueError(f"Genus must be non-negative: {self.g}")
        if self.pe <= 0 or self.ix <= 0:
            raise ValueError(f"Period and index must be positive: pe={self.pe}, ix={self.ix}")

    def pair(self):
        return self.pe, self.ix

    def __str__(self):
        return f"(g={self.g}, pe={self.pe}, ix={self.ix})"


@dataclass
class AdmissibilityResult:
    triple: PITriple
    violations: List[str] = field(default_factory=list)

    @property
    def admissible(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.admissible


@dataclass(frozen=True)
class SectionContext:
    """
    Hypotheses available about a curve over a p-adic field.

    even_cover_with_section covers both phrasings of the even cover hypothesis: a finite etale
    cover of even degree onto the curve, or from the curve onto one of positive genus, where the
    section lifts along the cover.
    """
    p: int
    g: int
    has_section: bool
    even_cover_with_section: bool = False

    def __post_init__(self):
        require_prime(self.p)
        if self.g <= 0:
            raise ValueError(f"Section consequences need positive genus, got g={self.g}")
