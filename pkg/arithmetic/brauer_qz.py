from functools import reduce
from typing import Iterable

from models.invariant_class import CyclicSubgroup, InvariantClass, RelativeBrauerShape, ZERO
from utils.number_theory import is_power_of, require_prime


def qz_add(a: InvariantClass, b: InvariantClass) -> InvariantClass:
    return InvariantClass.from_fraction(a.as_fraction() + b.as_fraction())


def qz_neg(a: InvariantClass) -> InvariantClass:
    return InvariantClass.from_fraction(-a.as_fraction())


def qz_scale(a: InvariantClass, k: int) -> InvariantClass:
    return InvariantClass.from_fraction(k * a.as_fraction())


def qz_sum(classes: Iterable[InvariantClass]) -> InvariantClass:
    return reduce(qz_add, classes, ZERO)


def qz_order(a: InvariantClass) -> int:
    """The order of a in Q/Z, which is its reduced denominator."""
    return a.denominator


def is_prime_power_order(a: InvariantClass, p: int) -> bool:
    """
    Check whether the order of a is p^k for some k >= 0.

    The zero class has order 1 = p^0 and passes for every prime.

    Raises:
        ValueError: If p is not prime.
    """
    require_prime(p)
    return is_power_of(qz_order(a), p)


def relative_brauer_local(period: int, index: int) -> RelativeBrauerShape:
    """
    Relative Brauer group of a curve over a p-adic local field with the given period and index.

    Over a local field the group is as large as the period and index allow:
    Br(X/K) = (1/ix)Z/Z with degree zero part (1/pe)Z/Z.

    Raises:
        ValueError: If period does not divide index.
    """
    if period <= 0 or index <= 0:
        raise ValueError(f"Period and index must be positive: pe={period}, ix={index}")
    if index % period != 0:
        raise ValueError(f"Period {period} does not divide index {index}")

    return RelativeBrauerShape(
        period=period,
        index=index,
        full=CyclicSubgroup(index),
        degree_zero=CyclicSubgroup(period),
        ns_order=index // period
    )


def relative_brauer_real(has_real_points: bool) -> CyclicSubgroup:
    """
    Relative Brauer group of a curve of positive genus over the reals.

    Brauer classes are detected by evaluation at real points, so the group is trivial when
    real points exist and is (1/2)Z/Z, generated by the Hamilton quaternions, when there are none.
    """
    return CyclicSubgroup(1 if has_real_points else 2)


def annihilated_by_index(shape: RelativeBrauerShape) -> bool:
    return all(qz_scale(a, shape.index).is_zero for a in shape.full.elements())
