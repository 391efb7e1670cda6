"""Exact arithmetic in the Gaussian integers and the Gaussian rationals."""

from __future__ import annotations

import math
import operator
import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Dict, Iterator, Tuple, Union

from sympy import factorint, isprime, sqrt_mod


class GaussianIntError(ValueError):
    """Raised for invalid Gaussian integer input or undefined operations."""


class FactorizationBudgetExceeded(GaussianIntError):
    """Raised when a norm is too large to be factored within the budget."""

    def __init__(self, value: "GaussianInt", budget_bits: int) -> None:
        super().__init__(
            f"norm of {value} exceeds the factorization budget of 2**{budget_bits}"
        )
        self.value = value
        self.budget_bits = budget_bits


_TEXT_PATTERN = re.compile(r"^\(\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\)$")
_RATIONAL_PATTERN = re.compile(r"^(\([^)]*\))(?:\s*/\s*(\d+))?$")


@dataclass(frozen=True, eq=False)
class GaussianInt:
    """The Gaussian integer ``re + im*i`` with arbitrary-precision parts."""

    re: int = 0
    im: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", operator.index(self.re))
        object.__setattr__(self, "im", operator.index(self.im))

    @classmethod
    def coerce(cls, value: "GaussianLike") -> "GaussianInt":
        if isinstance(value, GaussianInt):
            return value
        if isinstance(value, GaussianRational):
            return value.to_gaussian_int()
        return cls(operator.index(value), 0)

    @classmethod
    def parse(cls, text: str) -> "GaussianInt":
        """Parse the ``(re,im)`` textual form."""

        match = _TEXT_PATTERN.match(text.strip())
        if match is None:
            raise GaussianIntError(f"Malformed Gaussian integer: {text!r}")
        return cls(int(match.group(1)), int(match.group(2)))

    # Arithmetic ---------------------------------------------------------

    def __add__(self, other: object) -> "GaussianInt":
        if isinstance(other, GaussianRational):
            return NotImplemented
        try:
            value = GaussianInt.coerce(other)  # type: ignore[arg-type]
        except TypeError:
            return NotImplemented
        return GaussianInt(self.re + value.re, self.im + value.im)

    __radd__ = __add__

    def __sub__(self, other: object) -> "GaussianInt":
        if isinstance(other, GaussianRational):
            return NotImplemented
        try:
            value = GaussianInt.coerce(other)  # type: ignore[arg-type]
        except TypeError:
            return NotImplemented
        return GaussianInt(self.re - value.re, self.im - value.im)

    def __rsub__(self, other: object) -> "GaussianInt":
        return (-self) + other  # type: ignore[operator]

    def __mul__(self, other: object) -> "GaussianInt":
        if isinstance(other, GaussianRational):
            return NotImplemented
        try:
            value = GaussianInt.coerce(other)  # type: ignore[arg-type]
        except TypeError:
            return NotImplemented
        return GaussianInt(
            self.re * value.re - self.im * value.im,
            self.re * value.im + self.im * value.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "GaussianRational":
        return GaussianRational(self) / other  # type: ignore[operator]

    def __rtruediv__(self, other: object) -> "GaussianRational":
        return GaussianRational(GaussianInt.coerce(other)) / self  # type: ignore[arg-type]

    def __neg__(self) -> "GaussianInt":
        return GaussianInt(-self.re, -self.im)

    def __pow__(self, exponent: int) -> "GaussianInt":
        exponent = operator.index(exponent)
        if exponent < 0:
            raise GaussianIntError("negative powers leave the Gaussian integers")
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GaussianInt):
            return self.re == other.re and self.im == other.im
        if isinstance(other, GaussianRational):
            return other.den == 1 and other.num == self
        if isinstance(other, int):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return bool(self.re or self.im)

    def __str__(self) -> str:
        return f"({self.re},{self.im})"

    # Structure ----------------------------------------------------------

    def conjugate(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def sort_key(self) -> Tuple[int, int, int]:
        """Deterministic ordering by ``(norm, re, im)``."""

        return (self.norm(), self.re, self.im)

    def is_unit(self) -> bool:
        return self.norm() == 1

    def is_canonical(self) -> bool:
        """``True`` inside the half-open quadrant ``re > 0, -re < im <= re``."""

        return self.re > 0 and -self.re < self.im <= self.re


GaussianLike = Union[GaussianInt, int]

ZERO = GaussianInt(0, 0)
ONE = GaussianInt(1, 0)
I = GaussianInt(0, 1)
UNITS: Tuple[GaussianInt, ...] = (ONE, I, -ONE, -I)
RAMIFIED_PRIME = GaussianInt(1, 1)


def norm(z: GaussianLike) -> int:
    """Return ``re**2 + im**2``."""

    return GaussianInt.coerce(z).norm()


def _round_half_down(numerator: int, denominator: int) -> int:
    # nearest integer to numerator/denominator, ties toward -infinity
    return -((denominator - 2 * numerator) // (2 * denominator))


def divrem(a: GaussianLike, b: GaussianLike) -> Tuple[GaussianInt, GaussianInt]:
    """Euclidean division ``a = q*b + r`` with ``norm(r) < norm(b)``."""

    a = GaussianInt.coerce(a)
    b = GaussianInt.coerce(b)
    if not b:
        raise ZeroDivisionError("Gaussian integer division by zero")
    n = b.norm()
    scaled = a * b.conjugate()
    q = GaussianInt(_round_half_down(scaled.re, n), _round_half_down(scaled.im, n))
    return q, a - q * b


def divides(d: GaussianLike, z: GaussianLike) -> bool:
    """Return ``True`` when ``d`` divides ``z`` in the Gaussian integers."""

    d = GaussianInt.coerce(d)
    z = GaussianInt.coerce(z)
    if not d:
        return not z
    scaled = z * d.conjugate()
    n = d.norm()
    return scaled.re % n == 0 and scaled.im % n == 0


def exact_divide(z: GaussianLike, d: GaussianLike) -> GaussianInt:
    """Return ``z / d``, raising when the quotient is not a Gaussian integer."""

    q, r = divrem(z, d)
    if r:
        raise GaussianIntError(f"{GaussianInt.coerce(d)} does not divide {GaussianInt.coerce(z)}")
    return q


def canonical_associate(z: GaussianLike) -> Tuple[GaussianInt, GaussianInt]:
    """Return ``(c, u)`` with ``c = u*z`` and ``c`` canonical."""

    z = GaussianInt.coerce(z)
    if not z:
        raise GaussianIntError("zero has no canonical associate")
    for unit in UNITS:
        candidate = unit * z
        if candidate.is_canonical():
            return candidate, unit
    raise AssertionError(f"no canonical associate for {z}")  # pragma: no cover


def associates(z: GaussianLike) -> Tuple[GaussianInt, ...]:
    z = GaussianInt.coerce(z)
    return tuple(unit * z for unit in UNITS)


def gcd(a: GaussianLike, b: GaussianLike) -> GaussianInt:
    """Canonical greatest common divisor of ``a`` and ``b``."""

    a = GaussianInt.coerce(a)
    b = GaussianInt.coerce(b)
    if not a and not b:
        raise GaussianIntError("gcd(0, 0) is undefined")
    while b:
        _, r = divrem(a, b)
        a, b = b, r
    return canonical_associate(a)[0]


def valuation(z: GaussianLike, prime: GaussianLike) -> int:
    """Exponent of ``prime`` in the factorization of ``z``."""

    z = GaussianInt.coerce(z)
    prime = GaussianInt.coerce(prime)
    if not z:
        raise GaussianIntError("valuation of zero is unbounded")
    if prime.norm() <= 1:
        raise GaussianIntError(f"{prime} is not a prime")
    count = 0
    while divides(prime, z):
        z = exact_divide(z, prime)
        count += 1
    return count


def is_gaussian_prime(z: GaussianLike) -> bool:
    """Irreducibility test: prime norm, or norm ``p**2`` with ``p = 3 mod 4``."""

    n = norm(z)
    if n <= 1:
        return False
    if isprime(n):
        return True
    root = math.isqrt(n)
    return root * root == n and root % 4 == 3 and isprime(root)


def prime_sort_key(prime: GaussianInt) -> Tuple[int, int, int]:
    """Canonical prime order: by norm, then real part, then upper before lower."""

    return (prime.norm(), prime.re, -prime.im)


@lru_cache(maxsize=1024)
def primes_above(p: int) -> Tuple[GaussianInt, ...]:
    """Canonical Gaussian primes lying over the rational prime ``p``."""

    p = operator.index(p)
    if not isprime(p):
        raise GaussianIntError(f"{p} is not a rational prime")
    if p == 2:
        return (RAMIFIED_PRIME,)
    if p % 4 == 3:
        return (GaussianInt(p, 0),)
    c = min(sqrt_mod(p - 1, p, all_roots=True))
    upper = gcd(GaussianInt(p, 0), GaussianInt(c, 1))
    lower = canonical_associate(upper.conjugate())[0]
    return tuple(sorted((upper, lower), key=prime_sort_key))


# Factorizations -----------------------------------------------------------


@dataclass(frozen=True)
class GFactorization:
    """A unit together with canonical primes and their positive exponents."""

    unit: GaussianInt = ONE
    factors: Tuple[Tuple[GaussianInt, int], ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        unit = GaussianInt.coerce(self.unit)
        if not unit.is_unit():
            raise GaussianIntError(f"{unit} is not a unit")
        merged: Dict[GaussianInt, int] = {}
        for prime, exponent in self.factors:
            prime = GaussianInt.coerce(prime)
            exponent = operator.index(exponent)
            if exponent < 0:
                raise GaussianIntError("factor exponents must be non-negative")
            if not prime.is_canonical() or not is_gaussian_prime(prime):
                raise GaussianIntError(f"{prime} is not a canonical Gaussian prime")
            merged[prime] = merged.get(prime, 0) + exponent
        ordered = tuple(
            (prime, merged[prime])
            for prime in sorted(merged, key=prime_sort_key)
            if merged[prime] > 0
        )
        object.__setattr__(self, "unit", unit)
        object.__setattr__(self, "factors", ordered)

    @classmethod
    def from_exponents(
        cls, exponents: Dict[GaussianInt, int], unit: GaussianInt = ONE
    ) -> "GFactorization":
        return cls(unit=unit, factors=tuple(exponents.items()))

    @classmethod
    def parse(cls, text: str) -> "GFactorization":
        """Parse ``(a,b)^e*(c,d)`` forms; every base is factored in turn."""

        stripped = text.replace(" ", "")
        if stripped in ("", "1"):
            return cls()
        result = cls()
        for term in stripped.split("*"):
            base_text, _, exponent_text = term.partition("^")
            try:
                exponent = int(exponent_text) if exponent_text else 1
            except ValueError as exc:
                raise GaussianIntError(f"Malformed exponent in {term!r}") from exc
            if exponent < 0:
                raise GaussianIntError(f"Negative exponent in {term!r}")
            result = result * factor(GaussianInt.parse(base_text)) ** exponent
        return result

    @property
    def value(self) -> GaussianInt:
        result = self.unit
        for prime, exponent in self.factors:
            result = result * prime**exponent
        return result

    def exponents(self) -> Dict[GaussianInt, int]:
        return dict(self.factors)

    def exponent(self, prime: GaussianInt) -> int:
        return self.exponents().get(GaussianInt.coerce(prime), 0)

    def divisor_count(self) -> int:
        return math.prod(exponent + 1 for _, exponent in self.factors)

    def without_unit(self) -> "GFactorization":
        return GFactorization(unit=ONE, factors=self.factors)

    def divides(self, other: "GFactorization") -> bool:
        """Divisibility up to units."""

        theirs = other.exponents()
        return all(theirs.get(prime, 0) >= exponent for prime, exponent in self.factors)

    def missing_from(self, other: "GFactorization") -> "GFactorization":
        """The part of ``self`` that ``other`` does not account for."""

        theirs = other.exponents()
        return GFactorization(
            factors=tuple(
                (prime, exponent - theirs.get(prime, 0))
                for prime, exponent in self.factors
                if exponent > theirs.get(prime, 0)
            )
        )

    def gcd(self, other: "GFactorization") -> "GFactorization":
        theirs = other.exponents()
        return GFactorization(
            factors=tuple(
                (prime, min(exponent, theirs[prime]))
                for prime, exponent in self.factors
                if prime in theirs
            )
        )

    def lcm(self, other: "GFactorization") -> "GFactorization":
        merged = self.exponents()
        for prime, exponent in other.factors:
            merged[prime] = max(merged.get(prime, 0), exponent)
        return GFactorization.from_exponents(merged)

    def __mul__(self, other: "GFactorization") -> "GFactorization":
        if not isinstance(other, GFactorization):
            return NotImplemented
        return GFactorization(unit=self.unit * other.unit, factors=self.factors + other.factors)

    def __pow__(self, exponent: int) -> "GFactorization":
        exponent = operator.index(exponent)
        return GFactorization(
            unit=self.unit**exponent,
            factors=tuple((prime, e * exponent) for prime, e in self.factors),
        )

    def format(self, *, include_unit: bool = True) -> str:
        """Render as ``(a,b)^e*(c,d)`` in canonical prime order."""

        parts = []
        if include_unit and self.unit != ONE:
            parts.append(str(self.unit))
        for prime, exponent in self.factors:
            parts.append(str(prime) if exponent == 1 else f"{prime}^{exponent}")
        return "*".join(parts) if parts else "1"

    def __str__(self) -> str:
        return self.format()


@lru_cache(maxsize=65536)
def rational_prime_divisors(n: int) -> Tuple[int, ...]:
    """Sorted rational primes dividing ``n``."""

    return tuple(sorted(int(p) for p in factorint(n)))


def factor(z: GaussianLike, *, budget_bits: int | None = None) -> GFactorization:
    """Factor ``z`` into a unit and canonical Gaussian primes."""

    z = GaussianInt.coerce(z)
    if not z:
        raise GaussianIntError("zero cannot be factored")
    n = z.norm()
    if budget_bits is not None and n > 2**budget_bits:
        raise FactorizationBudgetExceeded(z, budget_bits)
    remaining = z
    exponents: Dict[GaussianInt, int] = {}
    for p in rational_prime_divisors(n):
        for prime in primes_above(int(p)):
            count = 0
            while divides(prime, remaining):
                remaining = exact_divide(remaining, prime)
                count += 1
            if count:
                exponents[prime] = count
    if not remaining.is_unit():  # pragma: no cover - factorint is exact
        raise AssertionError(f"incomplete factorization of {z}")
    return GFactorization.from_exponents(exponents, unit=remaining)


def divisors(f: GFactorization) -> Iterator[GaussianInt]:
    """One canonical representative per associate class of each divisor."""

    ranges = [range(exponent + 1) for _, exponent in f.factors]
    primes = [prime for prime, _ in f.factors]
    for choice in product(*ranges):
        value = ONE
        for prime, exponent in zip(primes, choice):
            value = value * prime**exponent
        yield canonical_associate(value)[0]


def sqrt_exact(z: GaussianLike) -> GaussianInt | None:
    """Square root in the Gaussian integers, or ``None`` when ``z`` is no square.

    The returned root lies in the half plane ``re > 0`` or ``re == 0, im > 0``.
    """

    z = GaussianInt.coerce(z)
    if not z:
        return ZERO
    modulus = math.isqrt(z.norm())
    if modulus * modulus != z.norm():
        return None
    # x**2 - y**2 = re, x**2 + y**2 = |z|
    if (modulus + z.re) % 2:
        return None
    x2, y2 = (modulus + z.re) // 2, (modulus - z.re) // 2
    x, y = math.isqrt(x2), math.isqrt(y2)
    if x * x != x2 or y * y != y2:
        return None
    if z.im < 0:
        y = -y
    root = GaussianInt(x, y)
    if root * root != z:  # pragma: no cover - guarded by the identities above
        return None
    if root.re < 0 or (root.re == 0 and root.im < 0):
        root = -root
    return root


# Gaussian rationals -------------------------------------------------------


@dataclass(frozen=True, eq=False)
class GaussianRational:
    """The value ``num / den`` in lowest terms with ``den > 0``."""

    num: GaussianInt = ZERO
    den: int = 1

    def __post_init__(self) -> None:
        num = GaussianInt.coerce(self.num)
        den = operator.index(self.den)
        if den == 0:
            raise ZeroDivisionError("Gaussian rational with zero denominator")
        if den < 0:
            num, den = -num, -den
        common = math.gcd(num.re, num.im, den)
        if common > 1:
            num = GaussianInt(num.re // common, num.im // common)
            den //= common
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def coerce(cls, value: "RationalLike") -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        return cls(GaussianInt.coerce(value))

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        """Parse ``(a,b)`` or ``(a,b)/d``."""

        match = _RATIONAL_PATTERN.match(text.strip())
        if match is None:
            raise GaussianIntError(f"Malformed Gaussian rational: {text!r}")
        return cls(GaussianInt.parse(match.group(1)), int(match.group(2) or 1))

    def is_integral(self) -> bool:
        return self.den == 1

    def to_gaussian_int(self) -> GaussianInt:
        if self.den != 1:
            raise GaussianIntError(f"{self} is not a Gaussian integer")
        return self.num

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.num.conjugate(), self.den)

    def reciprocal(self) -> "GaussianRational":
        if not self.num:
            raise ZeroDivisionError("reciprocal of zero")
        return GaussianRational(self.num.conjugate() * self.den, self.num.norm())

    def __add__(self, other: object) -> "GaussianRational":
        try:
            value = GaussianRational.coerce(other)  # type: ignore[arg-type]
        except TypeError:
            return NotImplemented
        return GaussianRational(self.num * value.den + value.num * self.den, self.den * value.den)

    __radd__ = __add__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.num, self.den)

    def __sub__(self, other: object) -> "GaussianRational":
        try:
            value = GaussianRational.coerce(other)  # type: ignore[arg-type]
        except TypeError:
            return NotImplemented
        return self + (-value)

    def __rsub__(self, other: object) -> "GaussianRational":
        return (-self) + other  # type: ignore[operator]

    def __mul__(self, other: object) -> "GaussianRational":
        try:
            value = GaussianRational.coerce(other)  # type: ignore[arg-type]
        except TypeError:
            return NotImplemented
        return GaussianRational(self.num * value.num, self.den * value.den)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "GaussianRational":
        try:
            value = GaussianRational.coerce(other)  # type: ignore[arg-type]
        except TypeError:
            return NotImplemented
        return self * value.reciprocal()

    def __rtruediv__(self, other: object) -> "GaussianRational":
        return GaussianRational.coerce(other) / self  # type: ignore[arg-type]

    def __pow__(self, exponent: int) -> "GaussianRational":
        exponent = operator.index(exponent)
        if exponent < 0:
            return self.reciprocal() ** (-exponent)
        return GaussianRational(self.num**exponent, self.den**exponent)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GaussianRational):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (GaussianInt, int)):
            return self.den == 1 and self.num == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.den == 1:
            return hash(self.num)
        return hash((self.num, self.den))

    def __bool__(self) -> bool:
        return bool(self.num)

    def sort_key(self) -> Tuple[int, int, int]:
        return (self.num.re, self.num.im, self.den)

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"


RationalLike = Union[GaussianRational, GaussianInt, int]


def nth_root(value: RationalLike, n: int) -> GaussianRational | None:
    """Return some ``r`` with ``r**n == value`` in ``Q(i)``, or ``None``."""

    value = GaussianRational.coerce(value)
    n = operator.index(n)
    if n < 1:
        raise GaussianIntError("root index must be positive")
    if not value:
        return GaussianRational(ZERO)
    numerator = factor(value.num)
    denominator = factor(value.den)
    exponents = numerator.exponents()
    for prime, exponent in denominator.factors:
        exponents[prime] = exponents.get(prime, 0) - exponent
    if any(exponent % n for exponent in exponents.values()):
        return None
    unit = numerator.unit * (denominator.unit ** 3)
    root_unit = next((u for u in UNITS if u**n == unit), None)
    if root_unit is None:
        return None
    root = GaussianRational(root_unit)
    for prime, exponent in exponents.items():
        root = root * GaussianRational(prime) ** (exponent // n)
    return root


def is_nth_power(value: RationalLike, n: int) -> bool:
    return nth_root(value, n) is not None


__all__ = [
    "FactorizationBudgetExceeded",
    "GFactorization",
    "GaussianInt",
    "GaussianIntError",
    "GaussianRational",
    "I",
    "ONE",
    "RAMIFIED_PRIME",
    "UNITS",
    "ZERO",
    "associates",
    "canonical_associate",
    "divides",
    "divisors",
    "divrem",
    "exact_divide",
    "factor",
    "gcd",
    "is_gaussian_prime",
    "is_nth_power",
    "nth_root",
    "norm",
    "prime_sort_key",
    "primes_above",
    "rational_prime_divisors",
    "sqrt_exact",
    "valuation",
]
