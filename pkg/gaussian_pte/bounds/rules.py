"""Divisibility rules producing factored lower bounds for the constants ``C_n``."""

from __future__ import annotations

import operator
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Dict, List, Tuple

from ..gint import RAMIFIED_PRIME, GaussianInt, GFactorization, prime_sort_key, primes_above, valuation
from .primes import BoundsError, PrimeKind, classify_rational_prime, gaussian_primes_up_to_norm

C5_RAMIFIED_EXPONENT = 4


class BoundRule(str, Enum):
    CONSECUTIVE = "consecutive"
    NORM_PRIME = "norm-prime"
    WINDOW = "window"
    AMPLIFY = "amplify"
    C5_SPECIAL = "c5-special"


@dataclass(frozen=True)
class BoundContribution:
    """One rule's claim that ``prime**exponent`` divides ``C_n``.

    ``s`` and ``ell`` are recorded for the consecutive-product rule only.
    """

    prime: GaussianInt
    exponent: int
    rule: BoundRule
    s: int | None = None
    ell: int | None = None

    def format(self) -> str:
        return f"{self.prime}^{self.exponent}:{self.rule.value}"


@dataclass(frozen=True)
class BoundEntry:
    """Lower bound for ``C_n`` together with the contributions that built it."""

    n: int
    lower: GFactorization
    provenance: Tuple[BoundContribution, ...]

    def format(self) -> str:
        return f"n={self.n} lower={self.lower.format(include_unit=False)}"


def _prime_cap(m: int) -> int:
    return 4 * m


# Rules ----------------------------------------------------------------------


def rule_consecutive(m: int, p: int) -> int:
    """``max(s - ell, 0)`` with ``s = m // p`` and ``ell`` the valuation of ``m``.

    The exponent applies to every canonical prime above ``p``.
    """

    m = operator.index(m)
    if m < 2:
        raise BoundsError("size must be at least 2")
    kind = classify_rational_prime(p).kind
    if kind is PrimeKind.INERT:
        raise BoundsError(f"{p} is inert; consecutive products need not lie in {p}O")
    s = m // p
    ell = valuation(GaussianInt(m), primes_above(p)[0])
    return max(s - ell, 0)


def _consecutive_contributions(m: int) -> List[BoundContribution]:
    contributions = []
    for prime in gaussian_primes_up_to_norm(max(m, 2)):
        # an inert prime (p, 0) lies over p, not over its norm p**2
        p = prime.re if prime.im == 0 else prime.norm()
        if p > m or classify_rational_prime(p).kind is PrimeKind.INERT:
            continue
        exponent = rule_consecutive(m, p)
        if exponent:
            contributions.append(
                BoundContribution(
                    prime=prime,
                    exponent=exponent,
                    rule=BoundRule.CONSECUTIVE,
                    s=m // p,
                    ell=valuation(GaussianInt(m), prime),
                )
            )
    return contributions


def rule_norm_prime(m: int) -> Tuple[BoundContribution, ...]:
    """``N(q) | C_{N(q)}`` for primes with ``N(q) = m > 3``."""

    m = operator.index(m)
    if m <= 3:
        return ()
    contributions = []
    for prime in gaussian_primes_up_to_norm(m):
        if prime.norm() != m:
            continue
        # an inert prime p has norm p**2 and carries the whole of m
        exponent = 2 if prime.im == 0 else 1
        contributions.append(BoundContribution(prime, exponent, BoundRule.NORM_PRIME))
    return tuple(contributions)


def rule_window(m: int) -> Tuple[BoundContribution, ...]:
    """Primes with ``n + 3 <= N(q) < n + 3 + (n - 2)/6`` divide ``C_m`` where ``n = m - 1``."""

    m = operator.index(m)
    if m < 3:
        raise BoundsError("the window rule needs size at least 3")
    n = m - 1
    low = n + 3
    contributions = []
    for prime in gaussian_primes_up_to_norm(_prime_cap(m)):
        norm = prime.norm()
        if low <= norm and 6 * norm < 6 * low + (n - 2):
            contributions.append(BoundContribution(prime, 1, BoundRule.WINDOW))
    return tuple(contributions)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _amplify(m: int, base: GFactorization) -> Tuple[GFactorization, List[BoundContribution]]:
    exponents = base.exponents()
    records: List[BoundContribution] = []
    for prime, exponent in base.factors:
        raised = _ceil_div(m, prime.norm())
        if raised > exponent:
            exponents[prime] = raised
            records.append(BoundContribution(prime, raised, BoundRule.AMPLIFY))
        if m == 5 and prime == RAMIFIED_PRIME and exponents[prime] < C5_RAMIFIED_EXPONENT:
            exponents[prime] = C5_RAMIFIED_EXPONENT
            records.append(BoundContribution(prime, C5_RAMIFIED_EXPONENT, BoundRule.C5_SPECIAL))
    return GFactorization.from_exponents(exponents), records


def amplify(m: int, base: GFactorization) -> GFactorization:
    """Raise every present prime to at least ``ceil(m / N(q))``; ``(1+i)**4`` for size 5."""

    return _amplify(operator.index(m), base)[0]


@lru_cache(maxsize=None)
def lower_bound(m: int) -> BoundEntry:
    """Per-prime maximum of the rule contributions, then amplified."""

    m = operator.index(m)
    if m < 2:
        raise BoundsError("size must be at least 2")
    contributions: List[BoundContribution] = list(_consecutive_contributions(m))
    contributions.extend(rule_norm_prime(m))
    if m >= 3:
        contributions.extend(rule_window(m))

    best: Dict[GaussianInt, int] = {}
    for contribution in contributions:
        best[contribution.prime] = max(best.get(contribution.prime, 0), contribution.exponent)
    lower, amplified = _amplify(m, GFactorization.from_exponents(best))
    provenance = sorted(
        contributions + amplified,
        key=lambda c: (prime_sort_key(c.prime), c.exponent, c.rule.value),
    )
    return BoundEntry(n=m, lower=lower, provenance=tuple(provenance))


__all__ = [
    "BoundContribution",
    "BoundEntry",
    "BoundRule",
    "amplify",
    "lower_bound",
    "rule_consecutive",
    "rule_norm_prime",
    "rule_window",
]
