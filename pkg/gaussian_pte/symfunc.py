"""Power sums, elementary symmetric functions and exact polynomials over Q(i)."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple

from .gint import (
    UNITS,
    ZERO,
    GaussianInt,
    GaussianRational,
    RationalLike,
    divisors,
    factor,
)

DEFAULT_BUDGET_BITS = 128


class PolynomialError(ValueError):
    """Raised when polynomial input violates an operation's preconditions."""


class InterpolationError(PolynomialError):
    """Raised when interpolation abscissae are not pairwise distinct."""


def _trim(coeffs: Iterable[GaussianRational]) -> Tuple[GaussianRational, ...]:
    values = list(coeffs)
    while values and not values[-1]:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial with Gaussian rational coefficients, index = degree."""

    coeffs: Tuple[GaussianRational, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "coeffs", _trim(GaussianRational.coerce(c) for c in self.coeffs)
        )

    @classmethod
    def constant(cls, value: RationalLike) -> "Polynomial":
        return cls((GaussianRational.coerce(value),))

    @classmethod
    def linear_root(cls, root: RationalLike) -> "Polynomial":
        """The monic polynomial ``z - root``."""

        return cls((-GaussianRational.coerce(root), GaussianRational(1)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> GaussianRational:
        if not self.coeffs:
            return GaussianRational(ZERO)
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def is_integral(self) -> bool:
        return all(c.is_integral() for c in self.coeffs)

    def integer_coefficients(self) -> Tuple[GaussianInt, ...]:
        if not self.is_integral():
            raise PolynomialError("polynomial has non-integral coefficients")
        return tuple(c.num for c in self.coeffs)

    def __call__(self, z: RationalLike) -> GaussianRational:
        point = GaussianRational.coerce(z)
        result = GaussianRational(ZERO)
        for c in reversed(self.coeffs):
            result = result * point + c
        return result

    def __add__(self, other: object) -> "Polynomial":
        if not isinstance(other, Polynomial):
            try:
                other = Polynomial.constant(other)  # type: ignore[arg-type]
            except TypeError:
                return NotImplemented
        size = max(len(self.coeffs), len(other.coeffs))
        zero = GaussianRational(ZERO)
        return Polynomial(
            tuple(
                (self.coeffs[i] if i < len(self.coeffs) else zero)
                + (other.coeffs[i] if i < len(other.coeffs) else zero)
                for i in range(size)
            )
        )

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: object) -> "Polynomial":
        if not isinstance(other, Polynomial):
            try:
                other = Polynomial.constant(other)  # type: ignore[arg-type]
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __mul__(self, other: object) -> "Polynomial":
        if not isinstance(other, Polynomial):
            try:
                scalar = GaussianRational.coerce(other)  # type: ignore[arg-type]
            except TypeError:
                return NotImplemented
            return Polynomial(tuple(c * scalar for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return Polynomial()
        product = [GaussianRational(ZERO)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                product[i + j] = product[i + j] + a * b
        return Polynomial(tuple(product))

    __rmul__ = __mul__

    def __divmod__(self, other: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        remainder = list(self.coeffs)
        quotient = [GaussianRational(ZERO)] * max(len(remainder) - other.degree, 0)
        lead_inverse = other.leading.reciprocal()
        for shift in range(len(quotient) - 1, -1, -1):
            coefficient = remainder[shift + other.degree] * lead_inverse
            quotient[shift] = coefficient
            if coefficient:
                for i, c in enumerate(other.coeffs):
                    remainder[shift + i] = remainder[shift + i] - coefficient * c
        return Polynomial(tuple(quotient)), Polynomial(tuple(remainder))

    def exact_quotient(self, other: "Polynomial") -> "Polynomial":
        quotient, remainder = divmod(self, other)
        if not remainder.is_zero():
            raise PolynomialError("division leaves a remainder")
        return quotient

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(
            f"{c}*z^{i}" for i, c in reversed(list(enumerate(self.coeffs))) if c
        )


def poly_from_roots(roots: Iterable[RationalLike]) -> Polynomial:
    """Expand ``prod(z - r)``."""

    result = Polynomial.constant(1)
    for root in roots:
        result = result * Polynomial.linear_root(root)
    return result


def power_sums(s: Sequence[GaussianInt], k_max: int) -> List[GaussianInt]:
    """Return ``[p_1, ..., p_{k_max}]`` of the multiset ``s``."""

    if k_max < 1:
        raise PolynomialError("k_max must be at least 1")
    values = [GaussianInt.coerce(v) for v in s]
    powers = list(values)
    sums: List[GaussianInt] = []
    for _ in range(k_max):
        total = ZERO
        for p in powers:
            total = total + p
        sums.append(total)
        powers = [p * v for p, v in zip(powers, values)]
    return sums


def elem_from_power(p: Sequence[RationalLike], n: int) -> List[GaussianRational]:
    """Newton's identities: ``k*e_k = sum_{i=1..k} (-1)**(i-1) e_{k-i} p_i``."""

    if len(p) < n:
        raise PolynomialError(f"need at least {n} power sums, got {len(p)}")
    sums = [GaussianRational.coerce(v) for v in p]
    e = [GaussianRational(1)]
    for k in range(1, n + 1):
        total = GaussianRational(ZERO)
        for i in range(1, k + 1):
            term = e[k - i] * sums[i - 1]
            total = total + term if i % 2 else total - term
        e.append(total / k)
    return e[1:]


def power_from_elem(e: Sequence[RationalLike], k_max: int) -> List[GaussianRational]:
    """Inverse of :func:`elem_from_power`; ``e_j`` vanishes beyond ``len(e)``."""

    elems = [GaussianRational(1)] + [GaussianRational.coerce(v) for v in e]
    zero = GaussianRational(ZERO)

    def elem(j: int) -> GaussianRational:
        return elems[j] if j < len(elems) else zero

    sums: List[GaussianRational] = []
    for k in range(1, k_max + 1):
        rest = zero
        for i in range(1, k):
            term = elem(k - i) * sums[i - 1]
            rest = rest + term if i % 2 else rest - term
        value = elem(k) * k - rest
        sums.append(value if k % 2 else -value)
    return sums


def lagrange_interpolate(
    points: Sequence[Tuple[RationalLike, RationalLike]],
) -> Polynomial:
    """Unique polynomial of degree below ``len(points)`` through ``points``."""

    xs = [GaussianRational.coerce(x) for x, _ in points]
    ys = [GaussianRational.coerce(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise InterpolationError("interpolation abscissae must be distinct")
    result = Polynomial()
    for j, (xj, yj) in enumerate(zip(xs, ys)):
        if not yj:
            continue
        basis = Polynomial.constant(yj)
        for l, xl in enumerate(xs):
            if l != j:
                basis = basis * Polynomial.linear_root(xl) * (xj - xl).reciprocal()
        result = result + basis
    return result


# Root extraction --------------------------------------------------------------


def _evaluate(coeffs: Sequence[GaussianInt], z: GaussianInt) -> GaussianInt:
    result = ZERO
    for c in reversed(coeffs):
        result = result * z + c
    return result


def _deflate(coeffs: Sequence[GaussianInt], root: GaussianInt) -> List[GaussianInt]:
    # synthetic division by (z - root); caller guarantees a zero remainder
    quotient = [ZERO] * (len(coeffs) - 1)
    carry = ZERO
    for i in range(len(coeffs) - 1, 0, -1):
        carry = coeffs[i] + carry * root
        quotient[i - 1] = carry
    return quotient


def gaussian_roots(
    p: Polynomial, *, budget_bits: int = DEFAULT_BUDGET_BITS
) -> List[Tuple[GaussianInt, int]]:
    """Gaussian-integer roots of a monic integral polynomial, with multiplicity.

    Roots outside the Gaussian integers are silently absent from the result.

    Raises:
        PolynomialError: if ``p`` is zero, non-monic or non-integral.
        FactorizationBudgetExceeded: if the constant term is too large to factor.
    """

    if p.is_zero():
        raise PolynomialError("the zero polynomial has no finite root set")
    if not p.is_monic():
        raise PolynomialError("root extraction needs a monic polynomial")
    coeffs = list(p.integer_coefficients())

    roots: List[Tuple[GaussianInt, int]] = []
    zeros = 0
    while len(coeffs) > 1 and not coeffs[0]:
        coeffs.pop(0)
        zeros += 1
    if zeros:
        roots.append((ZERO, zeros))
    if len(coeffs) == 1:
        return roots

    candidates = factor(coeffs[0], budget_bits=budget_bits)
    for divisor in divisors(candidates):
        for unit in UNITS:
            candidate = unit * divisor
            multiplicity = 0
            while len(coeffs) > 1 and not _evaluate(coeffs, candidate):
                coeffs = _deflate(coeffs, candidate)
                multiplicity += 1
            if multiplicity:
                roots.append((candidate, multiplicity))
            if len(coeffs) == 1:
                return sorted(roots, key=lambda item: item[0].sort_key())
    return sorted(roots, key=lambda item: item[0].sort_key())


def expand_roots(roots: Iterable[Tuple[GaussianInt, int]]) -> List[GaussianInt]:
    """Flatten ``(root, multiplicity)`` pairs into a list."""

    flat: List[GaussianInt] = []
    for root, multiplicity in roots:
        flat.extend([root] * multiplicity)
    return flat


__all__ = [
    "DEFAULT_BUDGET_BITS",
    "InterpolationError",
    "Polynomial",
    "PolynomialError",
    "elem_from_power",
    "expand_roots",
    "gaussian_roots",
    "lagrange_interpolate",
    "poly_from_roots",
    "power_from_elem",
    "power_sums",
]
