"""
Local and global section obstructions for curves over Q.

A curve mapping to the conic X^2 - aY^2 - bZ^2 = 0 carries the class of the quaternion algebra
(a, b) in its relative Brauer group at every place. At a finite place of residue characteristic p
a section forces that group to be a p-group, so a class of order 2 at an odd prime obstructs
sections. At the real place a section exists exactly when there are real points.
"""
import itertools

from collections import Counter
from typing import List, Optional, Sequence, Tuple

from arithmetic.brauer_qz import is_prime_power_order, qz_neg, qz_order, qz_sum
from arithmetic.hilbert import candidate_places, quaternion_invariants
from arithmetic.regular_models import index_from_model
from models.curve_descriptor import ConicCover, CurveDescriptor, DiagonalForm, ModelCurve
from models.invariant_class import CyclicSubgroup, InvariantClass
from models.place import Place
from models.reports import (DeductionReport, GlobalConclusion, GlobalReport, HBNVector, PlaceVerdict, Rule,
                            Verdict)
from utils.clogger import get_logger
from utils.number_theory import is_power_of, require_prime

_logger = get_logger("ObstructionEngine")


def genus_of(c: CurveDescriptor) -> int:
    """Genus of the curve; a smooth plane curve of degree 2n has genus (2n-1)(2n-2)/2."""
    if isinstance(c, DiagonalForm):
        return (2 * c.n - 1) * (2 * c.n - 2) // 2
    return c.genus


def real_points_diagonal(a: int, b: int) -> bool:
    """
    Whether X^2n = a Y^2n + b Z^2n has a real point.

    With a > 0 take Z = 0 and X/Y a real 2n-th root of a, symmetrically for b. With both negative
    the right hand side is never positive and only the trivial solution remains.
    """
    if a == 0 or b == 0:
        raise ValueError(f"Coefficients must be nonzero: a={a}, b={b}")
    return not (a < 0 and b < 0)


def local_brauer_class(c: CurveDescriptor, v: Place) -> InvariantClass:
    """
    The invariant at v of the conic's quaternion class, which lies in the curve's relative Brauer group.

    Raises:
        ValueError: For a ModelCurve, which carries no map to a conic.
    """
    if isinstance(c, ModelCurve):
        raise ValueError("A curve given by a regular model has no conic structure")
    return quaternion_invariants(c.symbol).get(v, InvariantClass())


def _no_section(v: Place, rule: Rule, detail: str, invariant: Optional[InvariantClass] = None,
                supporting: Tuple[Rule, ...] = ()) -> PlaceVerdict:
    return PlaceVerdict(v, Verdict.NO_SECTION, rule, supporting, has_local_points_known=False, invariant=invariant,
                        detail=detail)


def _finite_verdict(c: CurveDescriptor, v: Place) -> PlaceVerdict:
    p = v.p
    if isinstance(c, ModelCurve):
        if p != c.place_prime:
            return PlaceVerdict(v, Verdict.NO_INFORMATION, detail=f"no model data at {p}")
        ix = index_from_model(c.fibre)
        if not is_power_of(ix, p):
            return _no_section(v, Rule.SECTION_INDEX_P_POWER,
                               f"index {ix} read off the regular model is not a power of {p}",
                               supporting=(Rule.REGULAR_MODEL_INDEX,))
        return PlaceVerdict(v, Verdict.NO_INFORMATION, detail=f"index {ix} is a power of {p}")

    inv = local_brauer_class(c, v)
    if not is_prime_power_order(inv, p):
        return _no_section(v, Rule.SECTION_INDEX_P_POWER,
                           f"relative Brauer group contains {inv} of order {qz_order(inv)}, not a power of {p}", inv,
                           supporting=(Rule.CONIC_COVER_CLASS,))
    return PlaceVerdict(v, Verdict.NO_INFORMATION, invariant=inv, detail=f"invariant {inv} obstructs nothing at {p}")


def _real_verdict(c: CurveDescriptor, v: Place) -> PlaceVerdict:
    if isinstance(c, DiagonalForm):
        if not real_points_diagonal(c.a, c.b):
            return _no_section(v, Rule.REAL_SECTION_IFF_REAL_POINTS, "both coefficients negative, no real points",
                               local_brauer_class(c, v))
        return PlaceVerdict(v, Verdict.NO_INFORMATION, has_local_points_known=True,
                            invariant=local_brauer_class(c, v), detail="real points exist")
    if isinstance(c, ConicCover):
        return PlaceVerdict(v, Verdict.NO_INFORMATION, invariant=local_brauer_class(c, v),
                            detail="real points of an abstract cover are not decided")
    return PlaceVerdict(v, Verdict.NO_INFORMATION, detail="no real data for a model curve")


def section_verdict(c: CurveDescriptor, v: Place) -> PlaceVerdict:
    """
    Decide whether sections over the completion at v are obstructed.

    Args:
        c (CurveDescriptor): The curve.
        v (Place): The real place or a finite place.

    Returns:
        PlaceVerdict: NoSection with its rule, or NoInformation. Sections are never certified.

    Raises:
        ValueError: If the curve has genus 0.
    """
    genus = genus_of(c)
    if genus < 1:
        raise ValueError(f"Section obstructions need positive genus, {c} has genus {genus}")
    verdict = _real_verdict(c, v) if v.is_real else _finite_verdict(c, v)
    _logger.debug(f"{c} at {v}: {verdict.verdict.value} {verdict.detail}")
    return verdict


def _places_to_scan(c: CurveDescriptor) -> List[Place]:
    if isinstance(c, ModelCurve):
        places = [Place.real(), Place.finite(c.place_prime)]
    else:
        places = candidate_places(c.symbol)
    return sorted(set(places), key=Place.sort_key)


def global_report(c: CurveDescriptor, assume_section: bool = False) -> GlobalReport:
    """
    Scan every place where an obstruction can occur and draw the global conclusion.

    With an obstruction and genus >= 2 the section conjecture holds trivially for the curve.
    With assume_section, a global section is taken as given: then no place may be obstructed,
    and over Q the relative Brauer group vanishes.

    Raises:
        ValueError: If assume_section contradicts a local obstruction.
    """
    genus = genus_of(c)
    real_points = real_points_diagonal(c.a, c.b) if isinstance(c, DiagonalForm) else None
    if genus < 1:
        return GlobalReport(c, genus, [], GlobalConclusion.INCONCLUSIVE, real_points=real_points,
                            notes=["genus 0: section obstructions need positive genus"])

    verdicts = [section_verdict(c, v) for v in _places_to_scan(c)]
    obstructed = [verdict.place for verdict in verdicts if verdict.obstructed]
    notes = []

    if assume_section and obstructed:
        raise ValueError(f"A global section contradicts the local obstruction at {obstructed[0]}")

    if obstructed and genus >= 2:
        conclusion, witness = GlobalConclusion.SECTION_CONJECTURE_HOLDS_TRIVIALLY, obstructed[0]
    elif assume_section:
        conclusion, witness = GlobalConclusion.GLOBAL_BRAUER_VANISHES, None
        notes.append(f"with a section over Q: {Rule.RATIONALS_BRAUER_VANISHES.value}")
    else:
        conclusion, witness = GlobalConclusion.INCONCLUSIVE, None
        if obstructed:
            notes.append(f"obstructed at {obstructed[0]} but genus {genus} < 2")

    report = GlobalReport(c, genus, verdicts, conclusion, witness, real_points, notes)
    if report.finite_obstruction_with_real_points:
        report.notes.append("obstructed at a finite place although real points exist")
    _logger.info(f"report for {c}: {conclusion.value}" + (f" via {witness}" if witness else ""))
    return report


def hasse_brauer_noether_deduce(constraints: Sequence[Tuple[Place, CyclicSubgroup]]) -> List[HBNVector]:
    """
    All vectors of local invariants, one per place and inside its allowed group, summing to 0 in Q/Z.

    The last coordinate is forced by the others, so only the remaining coordinates are enumerated.

    Raises:
        ValueError: If a place appears twice.
    """
    places = [place for place, _ in constraints]
    repeated = [str(place) for place, count in Counter(places).items() if count > 1]
    if repeated:
        raise ValueError(f"Places must appear once: {', '.join(repeated)}")
    if not constraints:
        return [()]

    groups = [group for _, group in constraints]
    head, last_group = groups[:-1], groups[-1]
    vectors = []
    for prefix in itertools.product(*(list(group.elements()) for group in head)):
        last = qz_neg(qz_sum(prefix))
        if last in last_group:
            vectors.append(tuple(prefix) + (last,))
    return sorted(vectors, key=lambda vector: tuple(a.as_fraction() for a in vector))


def global_brauer_deduce(g: int, has_section: bool, bad_places: Sequence[Tuple[str, int]]) -> DeductionReport:
    """
    Over a number field with at most one bad place per residue characteristic, a section forces
    the relative Brauer group to vanish and with it pe = ix.

    Args:
        g (int): Positive genus.
        has_section (bool): Whether a global section is given.
        bad_places (Sequence[Tuple[str, int]]): Labels and residue characteristics of the places
            where the curve may be obstructed.
    """
    if g < 1:
        raise ValueError(f"Genus must be positive: {g}")
    for _, p in bad_places:
        require_prime(p)

    report = DeductionReport()
    repeats = sorted(p for p, count in Counter(p for _, p in bad_places).items() if count > 1)
    if repeats:
        report.notes.append(f"hypothesis fails: residue characteristics {repeats} occur at more than one place")
        return report
    if has_section:
        report.add("Br(X/F) = 0", Rule.GLOBAL_BRAUER_VANISHES)
        report.add("pe = ix", Rule.GLOBAL_BRAUER_VANISHES)
    return report


def corollary_q_deduce(g: int, has_section: bool, bad_primes: Sequence[int]) -> DeductionReport:
    """Over Q each prime is one place, so the one-place-per-characteristic hypothesis always holds."""
    if g < 1:
        raise ValueError(f"Genus must be positive: {g}")
    for p in bad_primes:
        require_prime(p)

    report = DeductionReport()
    if has_section:
        report.add("Br(X/Q) = 0", Rule.RATIONALS_BRAUER_VANISHES)
        report.add("pe = ix", Rule.RATIONALS_BRAUER_VANISHES)
    return report
