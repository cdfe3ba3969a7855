from typing import List, Optional, Tuple

from models.pi_triple import AdmissibilityResult, PITriple, SectionContext
from models.reports import DeductionReport, Rule
from utils.clogger import get_logger
from utils.number_theory import divides, is_power_of, positive_divisors, require_prime

_logger = get_logger("PeriodIndex")


def lichtenbaum_admissible(t: PITriple) -> AdmissibilityResult:
    """
    Check the conditions a (genus, period, index) triple of a curve over a p-adic field satisfies.

    The conditions are ix | pe + 1 - g, pe | g - 1, pe | ix | 2pe, and (g - 1)/pe odd when
    ix = 2pe. Every positive integer divides 0.

    Args:
        t (PITriple): The triple to check.

    Returns:
        AdmissibilityResult: Truthy when admissible; otherwise lists the violated conditions.

    Raises:
        ValueError: If g = 0.
    """
    if t.g < 1:
        raise ValueError(f"Admissibility is stated for positive genus, got g={t.g}")

    result = AdmissibilityResult(t)
    if not divides(t.ix, t.pe + 1 - t.g):
        result.violations.append(f"ix={t.ix} does not divide pe+1-g={t.pe + 1 - t.g}")
    if not divides(t.pe, t.g - 1):
        result.violations.append(f"pe={t.pe} does not divide g-1={t.g - 1}")
    if not divides(t.pe, t.ix) or not divides(t.ix, 2 * t.pe):
        result.violations.append(f"pe | ix | 2pe fails for pe={t.pe}, ix={t.ix}")
    elif t.ix == 2 * t.pe and divides(t.pe, t.g - 1) and ((t.g - 1) // t.pe) % 2 == 0:
        result.violations.append(f"ix=2pe but (g-1)/pe={(t.g - 1) // t.pe} is even")
    return result


def enumerate_admissible(g: int, bound: Optional[int] = None) -> List[Tuple[int, int]]:
    """
    All admissible (pe, ix) for genus g, sorted.

    For g >= 2 the period runs over the divisors of g - 1. For g = 1 every period is possible,
    so the bound on pe is required; for g >= 2 it only truncates the list.

    Raises:
        ValueError: If g < 1, or g = 1 without a bound.
    """
    if g < 1:
        raise ValueError(f"Enumeration needs positive genus, got g={g}")
    if g == 1:
        if bound is None:
            raise ValueError("Genus 1 admits every period; pass an explicit bound")
        periods = range(1, bound + 1)
    else:
        periods = [pe for pe in positive_divisors(g - 1) if bound is None or pe <= bound]

    # condition pe | ix | 2pe leaves ix in {pe, 2pe}
    pairs = {(pe, ix) for pe in periods for ix in (pe, 2 * pe) if lichtenbaum_admissible(PITriple(g, pe, ix))}
    return sorted(pairs)


def hurwitz_genus(g: int, degree: int) -> int:
    """Genus g' of a finite etale cover of the given degree: g' - 1 = degree * (g - 1)."""
    if g < 1 or degree < 1:
        raise ValueError(f"Genus and degree must be positive: g={g}, degree={degree}")
    return degree * (g - 1) + 1


def even_cover_genus_is_odd(g: int, degree: int) -> bool:
    return hurwitz_genus(g, degree) % 2 == 1


def step1_equivalence_holds(t: PITriple) -> bool:
    """
    Whether pe = ix exactly when ix | g - 1, for an admissible triple.

    Raises:
        ValueError: If the triple is not admissible.
    """
    result = lichtenbaum_admissible(t)
    if not result:
        raise ValueError(f"Triple {t} is not admissible: {'; '.join(result.violations)}")
    return (t.pe == t.ix) == divides(t.ix, t.g - 1)


def general_constraints(t: PITriple) -> List[str]:
    """Violations of pe | ix | 2g - 2, which holds over every field."""
    violations = []
    if not divides(t.pe, t.ix):
        violations.append(f"pe={t.pe} does not divide ix={t.ix}")
    if not divides(t.ix, 2 * t.g - 2):
        violations.append(f"ix={t.ix} does not divide 2g-2={2 * t.g - 2}")
    return violations


def finite_field_triple(g: int) -> PITriple:
    """Over a finite field the Brauer group vanishes, so period and index are 1."""
    return PITriple(g, 1, 1)


def _section_filter(g: int, p: int, period_equals_index: bool) -> List[Tuple[int, int]]:
    return [
        (pe, ix) for pe, ix in enumerate_admissible(g)
        if is_power_of(pe, p) and is_power_of(ix, p) and (pe == ix or not period_equals_index)
    ]


def section_consequences(ctx: SectionContext) -> DeductionReport:
    """
    Consequences of a section of the fundamental group sequence of a curve over a p-adic field.

    Every conclusion carries the rule it follows from. Without a section nothing is concluded.
    """
    report = DeductionReport()
    if not ctx.has_section:
        return report

    p = ctx.p
    report.add(f"pe is a power of {p}", Rule.SECTION_PERIOD_P_POWER)
    report.add(f"ix is a power of {p}", Rule.SECTION_INDEX_P_POWER)
    report.add("#Br(X/K) = ix", Rule.SECTION_BRAUER_ORDER)
    report.add(f"Brauer obstruction vanishes on torsion classes of order prime to {p}", Rule.SECTION_PRIME_TO_P_TORSION)

    period_equals_index = False
    if p != 2:
        report.add("pe = ix", Rule.ODD_P_PERIOD_EQUALS_INDEX)
        period_equals_index = True
    if ctx.even_cover_with_section:
        report.add("pe = ix", Rule.EVEN_COVER_PERIOD_EQUALS_INDEX)
        period_equals_index = True
    if p == 2 and not ctx.even_cover_with_section:
        report.notes.append("pe = ix is not decided for p = 2 without an even cover (odd degree covers of the quaternion conic)")

    if ctx.g >= 2:
        report.add(f"surviving (pe, ix) satisfy the genus {ctx.g} admissibility conditions", Rule.LICHTENBAUM)
        report.surviving_triples = [PITriple(ctx.g, pe, ix) for pe, ix in _section_filter(ctx.g, p, period_equals_index)]
    _logger.debug(f"section consequences for p={p}, g={ctx.g}: {report.statements()}")
    return report


def admissible_with_section(g: int, p: int) -> List[Tuple[int, int]]:
    """
    Admissible pairs compatible with a section: pe and ix powers of p, and pe = ix for odd p.

    Raises:
        ValueError: If g < 2 or p is not prime.
    """
    require_prime(p)
    if g < 2:
        raise ValueError(f"Section filtering is stated for g >= 2, got g={g}")
    return _section_filter(g, p, p != 2)
