"""Divisibility engine for the constants of ideal solutions over Z[i]."""

from .primes import (
    GAUSSIAN_DISCRIMINANT,
    BoundsError,
    PrimeClass,
    PrimeKind,
    classify_rational_prime,
    gaussian_primes_up_to_norm,
    is_fundamental_discriminant,
)
from .rules import (
    BoundContribution,
    BoundEntry,
    BoundRule,
    amplify,
    lower_bound,
    rule_consecutive,
    rule_norm_prime,
    rule_window,
)
from .upper import corpus_gcd_upper_bound

__all__ = [
    "BoundContribution",
    "BoundEntry",
    "BoundRule",
    "BoundsError",
    "GAUSSIAN_DISCRIMINANT",
    "PrimeClass",
    "PrimeKind",
    "amplify",
    "classify_rational_prime",
    "corpus_gcd_upper_bound",
    "gaussian_primes_up_to_norm",
    "is_fundamental_discriminant",
    "lower_bound",
    "rule_consecutive",
    "rule_norm_prime",
    "rule_window",
]
