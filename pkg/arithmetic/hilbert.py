from typing import Dict, List

from sympy import legendre_symbol

from arithmetic.brauer_qz import qz_sum
from models.invariant_class import HALF, InvariantClass, ZERO
from models.place import Place, QuaternionSymbol
from utils.number_theory import odd_prime_divisors, split_prime_part


def _epsilon(u: int) -> int:
    # (u - 1)/2 mod 2 for odd u
    return ((u - 1) // 2) % 2


def _omega(u: int) -> int:
    # (u^2 - 1)/8 mod 2 for odd u
    return ((u * u - 1) // 8) % 2


def _symbol_real(a: int, b: int) -> int:
    return -1 if a < 0 and b < 0 else 1


def _symbol_odd(a: int, b: int, p: int) -> int:
    alpha, u = split_prime_part(a, p)
    beta, v = split_prime_part(b, p)

    sign = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
    if beta % 2:
        sign *= legendre_symbol(u % p, p)
    if alpha % 2:
        sign *= legendre_symbol(v % p, p)
    return int(sign)


def _symbol_two(a: int, b: int) -> int:
    alpha, u = split_prime_part(a, 2)
    beta, v = split_prime_part(b, 2)

    exponent = _epsilon(u) * _epsilon(v) + alpha * _omega(v) + beta * _omega(u)
    return -1 if exponent % 2 else 1


def hilbert_symbol(q: QuaternionSymbol, v: Place) -> int:
    """
    Hilbert symbol (a, b)_v over the completion of Q at v.

    Returns +1 exactly when z^2 = a x^2 + b y^2 has a nontrivial solution over the completion.
    Odd primes use Legendre symbols of the unit parts, the prime 2 uses the unit classes mod 8.

    Args:
        q (QuaternionSymbol): The nonzero integers a, b.
        v (Place): The real place or a finite place.

    Returns:
        int: +1 or -1.
    """
    if v.is_real:
        return _symbol_real(q.a, q.b)
    if v.p == 2:
        return _symbol_two(q.a, q.b)
    return _symbol_odd(q.a, q.b, v.p)


def candidate_places(q: QuaternionSymbol) -> List[Place]:
    """Places where (a, b)_v can be -1: the real place, 2 and the odd primes dividing ab."""
    return [Place.real(), Place.finite(2)] + [Place.finite(p) for p in odd_prime_divisors(q.a, q.b)]


def quaternion_invariants(q: QuaternionSymbol) -> Dict[Place, InvariantClass]:
    """
    Local invariants of the quaternion algebra (a, b) at every candidate place.

    The invariant is 1/2 where the Hilbert symbol is -1 and 0 elsewhere; every place outside
    the candidate set has invariant 0, so the returned map determines the class completely.
    """
    return {
        place: HALF if hilbert_symbol(q, place) == -1 else ZERO
        for place in candidate_places(q)
    }


def quaternion_support(q: QuaternionSymbol) -> Dict[Place, InvariantClass]:
    return {place: inv for place, inv in quaternion_invariants(q).items() if not inv.is_zero}


def is_split_everywhere(q: QuaternionSymbol) -> bool:
    return not quaternion_support(q)


def product_formula_check(q: QuaternionSymbol) -> bool:
    """Check that the local invariants of (a, b) sum to zero in Q/Z."""
    return qz_sum(quaternion_invariants(q).values()).is_zero
