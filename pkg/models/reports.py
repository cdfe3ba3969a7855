from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

from models.curve_descriptor import CurveDescriptor
from models.invariant_class import InvariantClass
from models.pi_triple import PITriple
from models.place import Place


class Rule(Enum):
    """Theorem rules cited by deductions and verdicts."""
    LICHTENBAUM = "lichtenbaum-admissibility"
    SECTION_PERIOD_P_POWER = "section-period-p-power"
    SECTION_INDEX_P_POWER = "section-index-p-power"
    SECTION_BRAUER_ORDER = "section-brauer-order-equals-index"
    SECTION_PRIME_TO_P_TORSION = "section-kills-prime-to-p-torsion"
    ODD_P_PERIOD_EQUALS_INDEX = "section-odd-p-period-equals-index"
    EVEN_COVER_PERIOD_EQUALS_INDEX = "section-even-cover-period-equals-index"
    REAL_SECTION_IFF_REAL_POINTS = "real-section-iff-real-points"
    CONIC_COVER_CLASS = "conic-cover-carries-conic-class"
    REGULAR_MODEL_INDEX = "regular-model-index-gcd"
    GLOBAL_BRAUER_VANISHES = "global-brauer-vanishes-one-place-per-prime"
    RATIONALS_BRAUER_VANISHES = "rationals-brauer-vanishes"


@dataclass(frozen=True)
class Conclusion:
    statement: str
    rule: Rule


@dataclass
class DeductionReport:
    conclusions: List[Conclusion] = field(default_factory=list)
    surviving_triples: Optional[List[PITriple]] = None
    notes: List[str] = field(default_factory=list)

    def statements(self) -> List[str]:
        return [conclusion.statement for conclusion in self.conclusions]

    def add(self, statement: str, rule: Rule) -> None:
        self.conclusions.append(Conclusion(statement, rule))


class Verdict(Enum):
    NO_SECTION = "NoSection"
    NO_INFORMATION = "NoInformation"


@dataclass(frozen=True)
class PlaceVerdict:
    """
    Section verdict at one place.

    A NoSection verdict also rules out local points there, since a point gives a section,
    and has_local_points_known is then False.
    """
    place: Place
    verdict: Verdict
    reason: Optional[Rule] = None
    supporting: Tuple[Rule, ...] = ()
    has_local_points_known: Optional[bool] = None
    invariant: Optional[InvariantClass] = None
    detail: str = ""

    def __post_init__(self):
        if self.verdict == Verdict.NO_SECTION:
            if self.reason is None:
                raise ValueError(f"NoSection at {self.place} needs a rule citation")
            if self.has_local_points_known:
                raise ValueError(f"NoSection at {self.place} contradicts local points")

    @property
    def obstructed(self) -> bool:
        return self.verdict == Verdict.NO_SECTION


class GlobalConclusion(Enum):
    SECTION_CONJECTURE_HOLDS_TRIVIALLY = "SectionConjectureHoldsTrivially"
    GLOBAL_BRAUER_VANISHES = "GlobalBrauerVanishes"
    INCONCLUSIVE = "Inconclusive"


@dataclass
class GlobalReport:
    curve: CurveDescriptor
    genus: int
    place_verdicts: List[PlaceVerdict]
    global_conclusion: GlobalConclusion
    witness: Optional[Place] = None
    real_points: Optional[bool] = None
    notes: List[str] = field(default_factory=list)

    def __post_init__(self):
        if self.global_conclusion == GlobalConclusion.SECTION_CONJECTURE_HOLDS_TRIVIALLY:
            if self.genus < 2:
                raise ValueError(f"The section conjecture concerns genus >= 2, got {self.genus}")
            if self.witness not in self.obstructed_places():
                raise ValueError(f"Witness {self.witness} carries no NoSection verdict")

    def obstructed_places(self) -> List[Place]:
        return [verdict.place for verdict in self.place_verdicts if verdict.obstructed]

    @property
    def rational_points_excluded(self) -> bool:
        """Any local obstruction rules out global sections and, with them, rational points."""
        return bool(self.obstructed_places())

    @property
    def finite_obstruction_with_real_points(self) -> bool:
        """Obstructed at a finite place although real points exist."""
        return bool(self.real_points) and any(not place.is_real for place in self.obstructed_places())


HBNVector = Tuple[InvariantClass, ...]
