"""Exact integer and multiplicative-function arithmetic.

Everything here is deterministic, dependency-free and safe for data-parallel
use.  Factorisation is plain trial division over a 2/3/5 wheel: inputs in
this package stay far below 10**12, where that is both fast and certain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "kronecker",
    "Discriminant",
    "decompose_discriminant",
    "is_discriminant",
    "factorize",
    "divisors",
    "mobius",
    "totient",
    "is_squarefree",
    "divisor_count",
    "tau_s",
    "smallest_prime_factors",
]

# increments of the 2/3/5 wheel, starting from 7
_WHEEL = (4, 2, 4, 2, 4, 6, 2, 6)


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n), defined for all integers.

    Extends the Jacobi symbol by
        (a|0)  = 1 if a = +-1 else 0,
        (a|-1) = 1 if a >= 0 else -1,
        (a|2)  = 0 if a even, 1 if a = +-1 (mod 8), -1 if a = +-3 (mod 8).
    """
    if n == 0:
        return 1 if a in (1, -1) else 0
    sign = 1
    if n < 0:
        n = -n
        if a < 0:
            sign = -1
    # strip factors of two from n using the (a|2) table above
    twos = 0
    while n % 2 == 0:
        n //= 2
        twos += 1
    if twos:
        if a % 2 == 0:
            return 0
        if twos % 2 == 1 and a % 8 in (3, 5):
            sign = -sign
    # n is now odd and positive: binary Jacobi with reciprocity
    a %= n
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorisation of n >= 1 as sorted (prime, exponent) pairs."""
    if n < 1:
        raise ValueError(f"factorize expects n >= 1, got {n}")
    out: list[tuple[int, int]] = []
    for p in (2, 3, 5):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    p, i = 7, 0
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += _WHEEL[i]
        i = (i + 1) % 8
    if n > 1:
        out.append((n, 1))
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of n >= 1, sorted."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def mobius(n: int) -> int:
    fac = factorize(n)
    for _, e in fac:
        if e > 1:
            return 0
    return -1 if len(fac) % 2 else 1


def totient(n: int) -> int:
    phi = 1
    for p, e in factorize(n):
        phi *= p ** (e - 1) * (p - 1)
    return phi


def is_squarefree(n: int) -> bool:
    return all(e == 1 for _, e in factorize(n))


def divisor_count(n: int) -> int:
    out = 1
    for _, e in factorize(n):
        out *= e + 1
    return out


def is_discriminant(delta: int) -> bool:
    return delta % 4 in (0, 1)


@dataclass(frozen=True)
class Discriminant:
    """A nonzero discriminant delta = d_fund * ell**2 with d_fund fundamental."""

    delta: int
    d_fund: int
    ell: int

    def __post_init__(self):
        if self.delta == 0 or self.delta % 4 not in (0, 1):
            raise ValueError(f"not a nonzero discriminant: {self.delta}")
        if self.d_fund * self.ell**2 != self.delta:
            raise ValueError("d_fund * ell**2 != delta")


@lru_cache(maxsize=65536)
def decompose_discriminant(delta: int) -> Discriminant:
    """Split delta = D * ell**2 with D a fundamental discriminant.

    D is either 1 (mod 4) and squarefree, or 4m with m squarefree and
    m = 2, 3 (mod 4).  D = 1 occurs exactly when delta is a perfect square.
    """
    if delta == 0:
        raise ValueError("delta = 0 has no fundamental decomposition")
    if delta % 4 not in (0, 1):
        raise ValueError(f"delta = {delta} is not a discriminant (need 0,1 mod 4)")
    sign = 1 if delta > 0 else -1
    core, sqpart = 1, 1
    for p, e in factorize(abs(delta)):
        sqpart *= p ** (e // 2)
        if e % 2:
            core *= p
    core *= sign
    if core % 4 == 1:
        return Discriminant(delta, core, sqpart)
    # core = 2,3 (mod 4): delta = 0 (mod 4) forces sqpart even
    return Discriminant(delta, 4 * core, sqpart // 2)


def tau_s(n: int, s: complex) -> complex:
    """Divisor sum n**(s-1/2) * sum_{d|n} d**(1-2s), evaluated exactly."""
    if n < 1:
        raise ValueError(f"tau_s expects n >= 1, got {n}")
    s = complex(s)
    total = sum(complex(d) ** (1 - 2 * s) for d in divisors(n))
    return complex(n) ** (s - 0.5) * total


def smallest_prime_factors(limit: int):
    """Sieve of smallest prime factors: spf[n] for 0 <= n <= limit.

    Returned as a numpy int64 array (the factorisation table handed to the
    compiled kernels).  spf[0] = spf[1] = 1.
    """
    import numpy as np

    spf = np.zeros(limit + 1, dtype=np.int64)
    spf[0] = spf[1] = 1
    for i in range(2, limit + 1):
        if spf[i] == 0:
            spf[i::i] = np.where(spf[i::i] == 0, i, spf[i::i])
    return spf


def isqrt_floor(p: int, disc: int, q: int) -> int:
    """floor((p + sqrt(disc)) / q) for a positive non-square disc, exact.

    p + sqrt(disc) lies strictly between p+r and p+r+1 with r = isqrt(disc),
    an interval free of integers, so floors through it are constant.
    """
    r = math.isqrt(disc)
    if q > 0:
        return (p + r) // q
    # q < 0: floor(x/q) = -ceil(x/|q|) = -(floor(x/|q|) + 1) for irrational x
    return -((p + r) // (-q) + 1)
