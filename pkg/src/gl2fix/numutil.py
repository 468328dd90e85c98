"""Small integer number theory for the counting formulas.

Everything here runs on degrees and group orders, which stay tiny, so plain
trial division is used throughout.
"""

from functools import lru_cache
from math import gcd


def _check_positive(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"expected a positive integer, got {n!r}")


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``n`` as ``((prime, exponent), ...)``, ascending."""
    _check_positive(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def prime_factors(n: int) -> list[int]:
    return [prime for prime, _ in factorize(n)]


def is_prime(n: int) -> bool:
    if not isinstance(n, int) or n < 2:
        return False
    return factorize(n) == ((n, 1),)


def prime_power(n: int) -> tuple[int, int] | None:
    """Return ``(p, k)`` with ``n == p**k``, or None when ``n`` is not a prime power."""
    if not isinstance(n, int) or n < 2:
        return None
    f = factorize(n)
    return f[0] if len(f) == 1 else None


def moebius(n: int) -> int:
    _check_positive(n)
    mu = 1
    for _, e in factorize(n):
        if e > 1:
            return 0
        mu = -mu
    return mu


def euler_phi(n: int) -> int:
    _check_positive(n)
    result = n
    for prime, _ in factorize(n):
        result = result // prime * (prime - 1)
    return result


def divisors(n: int) -> list[int]:
    _check_positive(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def divisors_coprime_to(n: int, c: int) -> list[int]:
    """Ascending divisors ``d`` of ``n`` with ``gcd(d, c) == 1``."""
    _check_positive(c)
    return [d for d in divisors(n) if gcd(d, c) == 1]
