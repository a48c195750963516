"""Exact integer and modular arithmetic shared by all ring_order modules.

Python integers are arbitrary precision, so every modular product here is exact. Factorization uses
deterministic trial division, which is sufficient for the supported moduli (up to caps.modulus).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

from zorder.common.zorder.src.config import get_cap
from zorder.ring_order.src.errors import InvalidModulusError, InvalidResidueError


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of a modulus n.

    Attributes:
        n: The modulus
        factors: (prime, exponent) pairs with strictly increasing primes; empty for n = 1
    """

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if reduce(lambda acc, pe: acc * pe[0] ** pe[1], self.factors, 1) != self.n:
            raise ValueError(f"Factors {self.factors} do not multiply to {self.n}")
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)) or any(e < 1 for _, e in self.factors):
            raise ValueError(f"Factors {self.factors} are not in canonical form")

    @property
    def k(self) -> int:
        """Number of distinct primes."""
        return len(self.factors)

    @property
    def prime_powers(self) -> tuple[int, ...]:
        """The maximal prime powers p_i^alpha_i dividing n, in prime order."""
        return tuple(p**e for p, e in self.factors)


@dataclass(frozen=True)
class ResidueVector:
    """CRT decomposition of a residue: one (prime_power, residue) component per prime of n."""

    components: tuple[tuple[int, int], ...]

    def recombine(self) -> int:
        """The residue this vector was decomposed from."""
        return crt_combine(self)


def factorize(n: int) -> Factorization:
    """Factorize n by trial division up to sqrt(n).

    Raises:
        InvalidModulusError: If n < 1 or n exceeds caps.modulus
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidModulusError(f"Modulus must be a positive integer, got {n!r}")
    if n > (limit := get_cap("modulus")):
        raise InvalidModulusError(f"Modulus {n} exceeds the supported maximum {limit}")

    factors: list[tuple[int, int]] = []
    rest = n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if rest > 1:
        factors.append((rest, 1))

    return Factorization(n=n, factors=tuple(factors))


def euler_phi(f: Factorization) -> int:
    """Euler's totient from a factorization: prod p^(e-1) * (p-1); phi(1) = 1."""
    return math.prod(p ** (e - 1) * (p - 1) for p, e in f.factors)


def gcd(a: int, b: int) -> int:
    """Greatest common divisor with gcd(0, 0) = 0 and gcd(0, m) = m."""
    return math.gcd(a, b)


def pow_mod(base: int, exp: int, n: int) -> int:
    """Canonical residue of base^exp mod n. x^0 is 1 mod n, which is 0 for n = 1."""
    if exp < 0:
        raise ValueError(f"Exponent must be nonnegative, got {exp}")
    if n < 1:
        raise InvalidModulusError(f"Modulus must be positive, got {n}")
    return pow(base, exp, n)


def residue_decompose(a: int, f: Factorization) -> ResidueVector:
    """Split a residue into its remainders modulo each maximal prime power of n."""
    if not 0 <= a < f.n:
        raise InvalidResidueError(f"{a} is not a canonical residue mod {f.n}")
    return ResidueVector(components=tuple((q, a % q) for q in f.prime_powers))


def crt_combine(v: ResidueVector) -> int:
    """Chinese remainder recombination of a ResidueVector; the empty vector gives 0."""
    n = math.prod(q for q, _ in v.components)
    total = 0
    for q, r in v.components:
        m = n // q
        total += r * m * pow(m, -1, q)
    return total % n


def divisors(f: Factorization) -> list[int]:
    """All positive divisors of n in ascending order."""
    divs = [1]
    for p, e in f.factors:
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def is_square_free(f: Factorization) -> bool:
    """True if every prime of n occurs exactly once (n = 1 included)."""
    return all(e == 1 for _, e in f.factors)


def valuation(a: int, p: int, limit: int) -> int:
    """Exponent of p in a, capped at limit. a = 0 is divisible by every power, so it yields limit."""
    if a == 0:
        return limit
    e = 0
    while e < limit and a % p == 0:
        a //= p
        e += 1
    return e
