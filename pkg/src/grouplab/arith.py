"""Small integer helpers: primality, factorization, multiplicative order."""

from __future__ import annotations

import math


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def prime_factorization(n: int) -> dict[int, int]:
    """Map prime -> multiplicity; {} for n = 1."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def multiplicative_order(a: int, modulus: int) -> int:
    """Least r >= 1 with a^r = 1 (mod modulus); requires gcd(a, modulus) = 1."""
    if math.gcd(a, modulus) != 1:
        raise ValueError(f"{a} is not invertible modulo {modulus}")
    if modulus == 1:
        return 1
    r = 1
    cur = a % modulus
    while cur != 1:
        cur = (cur * a) % modulus
        r += 1
    return r
