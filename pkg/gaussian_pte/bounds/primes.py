"""Rational prime classification and enumeration of small Gaussian primes."""

from __future__ import annotations

import operator
from dataclasses import dataclass
from enum import Enum
from typing import List

from sympy import factorint, isprime, legendre_symbol, primerange

from ..gint import GaussianInt, prime_sort_key, primes_above

GAUSSIAN_DISCRIMINANT = -4


class BoundsError(ValueError):
    """Raised for invalid input to the divisibility engine."""


class PrimeKind(str, Enum):
    RAMIFIED = "ramified"
    SPLIT = "split"
    INERT = "inert"


@dataclass(frozen=True)
class PrimeClass:
    """Behaviour of the rational prime ``p`` in the quadratic order of ``discriminant``."""

    p: int
    kind: PrimeKind
    discriminant: int = GAUSSIAN_DISCRIMINANT


def is_fundamental_discriminant(d: int) -> bool:
    if d in (0, 1):
        return False
    if d % 4 == 1:
        core = d
    elif d % 4 == 0 and (d // 4) % 4 in (2, 3):
        core = d // 4
    else:
        return False
    return all(exponent == 1 for exponent in factorint(abs(core)).values())


def _kronecker_at_two(d: int) -> int:
    if d % 2 == 0:
        return 0
    return 1 if d % 8 in (1, 7) else -1


def classify_rational_prime(p: int, d_disc: int = GAUSSIAN_DISCRIMINANT) -> PrimeClass:
    """Ramified, split or inert according to the Kronecker symbol ``(D/p)``."""

    p = operator.index(p)
    if not isprime(p):
        raise BoundsError(f"{p} is not a rational prime")
    if not is_fundamental_discriminant(d_disc):
        raise BoundsError(f"{d_disc} is not a fundamental discriminant")
    symbol = _kronecker_at_two(d_disc) if p == 2 else legendre_symbol(d_disc % p, p)
    if symbol == 0:
        kind = PrimeKind.RAMIFIED
    elif symbol == 1:
        kind = PrimeKind.SPLIT
    else:
        kind = PrimeKind.INERT
    return PrimeClass(p=p, kind=kind, discriminant=d_disc)


def gaussian_primes_up_to_norm(limit: int) -> List[GaussianInt]:
    """All canonical Gaussian primes of norm at most ``limit``, in prime order."""

    if limit < 2:
        raise BoundsError("limit must be at least 2")
    primes: List[GaussianInt] = []
    for p in primerange(2, limit + 1):
        if classify_rational_prime(p).kind is PrimeKind.INERT and p * p > limit:
            continue
        primes.extend(primes_above(int(p)))
    return sorted(primes, key=prime_sort_key)


__all__ = [
    "BoundsError",
    "GAUSSIAN_DISCRIMINANT",
    "PrimeClass",
    "PrimeKind",
    "classify_rational_prime",
    "gaussian_primes_up_to_norm",
    "is_fundamental_discriminant",
]
