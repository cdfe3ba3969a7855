from typing import List, Tuple

from sympy import divisors, factorint, isprime, multiplicity, primefactors


def divides(d: int, n: int) -> bool:
    """
    Divisibility with the usual convention that every positive integer divides 0.

    Args:
        d (int): A positive divisor.
        n (int): Any integer, negative values included.

    Returns:
        bool: True if n is a multiple of d.
    """
    if d <= 0:
        raise ValueError(f"Divisor must be positive: {d}")
    return n % d == 0


def require_prime(p: int) -> int:
    if not isinstance(p, int) or isinstance(p, bool) or not isprime(p):
        raise ValueError(f"Expected a prime, got: {p}")
    return p


def is_power_of(n: int, p: int) -> bool:
    """
    Check whether n = p^k for some k >= 0 (n = 1 passes for every p).

    Args:
        n (int): A positive integer.
        p (int): A prime.
    """
    require_prime(p)
    if n <= 0:
        raise ValueError(f"Expected a positive integer, got: {n}")
    return n == p ** multiplicity(p, n)


def prime_power_base(q: int) -> int:
    """
    Return the prime p with q = p^k, k >= 1.

    Raises:
        ValueError: If q is not a prime power.
    """
    if q < 2:
        raise ValueError(f"Not a prime power: {q}")
    factors = factorint(q)
    if len(factors) != 1:
        raise ValueError(f"Not a prime power: {q}")
    return next(iter(factors))


def split_prime_part(n: int, p: int) -> Tuple[int, int]:
    """
    Write a nonzero integer as p^v * u with u prime to p.

    Returns:
        Tuple[int, int]: The valuation v and the unit part u (sign kept).
    """
    if n == 0:
        raise ValueError("Zero has no p-adic unit part")
    v = multiplicity(p, abs(n))
    return v, n // p ** v


def odd_prime_divisors(*values: int) -> List[int]:
    primes = set()
    for value in values:
        primes.update(primefactors(abs(value)))
    primes.discard(2)
    return sorted(primes)


def positive_divisors(n: int) -> List[int]:
    return divisors(n)
