"""Verification, constants and transformations of PTE solutions."""

from __future__ import annotations

from collections import Counter
from typing import Sequence

from ..gint import GaussianInt, GaussianLike, divrem
from ..symfunc import poly_from_roots
from .models import AffineMap, NonIntegralImageError, NotIdealError, PteSolution, SolutionError


def verify_degree(s: PteSolution) -> int:
    """Largest ``j`` such that the power sums of ``x`` and ``y`` agree for ``1..j``."""

    x_powers = list(s.x)
    y_powers = list(s.y)
    degree = 0
    for _ in range(s.n):
        x_sum = sum(x_powers, GaussianInt())
        y_sum = sum(y_powers, GaussianInt())
        if x_sum != y_sum:
            break
        degree += 1
        x_powers = [p * v for p, v in zip(x_powers, s.x)]
        y_powers = [p * v for p, v in zip(y_powers, s.y)]
    return degree


def is_ideal(s: PteSolution) -> bool:
    return verify_degree(s) >= s.n - 1


def constant(s: PteSolution) -> GaussianInt:
    """The constant ``prod(z - x_i) - prod(z - y_i)`` of an ideal solution."""

    difference = poly_from_roots(s.x) - poly_from_roots(s.y)
    if difference.is_zero():
        raise SolutionError("X and Y coincide; the difference polynomial vanishes")
    if difference.degree > 0:
        raise NotIdealError(
            f"solution is not ideal: the difference has degree {difference.degree}"
        )
    return difference.coeffs[0].to_gaussian_int()


def _falling_factorial_sum(values: Sequence[GaussianInt], m: int) -> GaussianInt:
    total = GaussianInt()
    for v in values:
        term = GaussianInt(1)
        for j in range(m):
            term = term * (v - j)
        total = total + term
    return total


def falling_factorial_check(s: PteSolution, k: int) -> bool:
    """Compare ``sum x(x-1)...(x-m+1)`` on both sides for ``m = 1..k``."""

    if not 1 <= k <= s.n - 1:
        raise SolutionError(f"degree {k} outside 1..{s.n - 1}")
    return all(
        _falling_factorial_sum(s.x, m) == _falling_factorial_sum(s.y, m)
        for m in range(1, k + 1)
    )


def _apply(f: AffineMap, values: Sequence[GaussianInt]) -> tuple[GaussianInt, ...]:
    images = []
    for v in values:
        image = f(v)
        if not image.is_integral():
            raise NonIntegralImageError(f"{f} sends {v} to the non-integral {image}")
        images.append(image.num)
    return tuple(images)


def affine_apply(s: PteSolution, f: AffineMap) -> PteSolution:
    """Apply ``z -> m*z + k`` to both multisets."""

    return PteSolution(x=_apply(f, s.x), y=_apply(f, s.y), claimed_degree=s.claimed_degree)


def translate(s: PteSolution, shift: GaussianLike) -> PteSolution:
    return affine_apply(s, AffineMap.translation(GaussianInt.coerce(shift)))


def conjugate_solution(s: PteSolution) -> PteSolution:
    return PteSolution(
        x=tuple(v.conjugate() for v in s.x),
        y=tuple(v.conjugate() for v in s.y),
        claimed_degree=s.claimed_degree,
    )


def pairing_mod_q(s: PteSolution, q: GaussianLike) -> bool:
    """``True`` when ``x`` and ``y`` share their residue multiset modulo ``q``."""

    q = GaussianInt.coerce(q)

    def residues(values: Sequence[GaussianInt]) -> Counter:
        return Counter(divrem(v, q)[1] for v in values)

    return residues(s.x) == residues(s.y)


def goldbach_family(
    a: GaussianLike, b: GaussianLike, c: GaussianLike, d: GaussianLike
) -> PteSolution:
    """The size-4 degree-2 family ``{a+b+d, a+c+d, b+c+d, d} =_2 {a+d, b+d, c+d, a+b+c+d}``."""

    a, b, c, d = (GaussianInt.coerce(v) for v in (a, b, c, d))
    return PteSolution(
        x=(a + b + d, a + c + d, b + c + d, d),
        y=(a + d, b + d, c + d, a + b + c + d),
        claimed_degree=2,
    )


__all__ = [
    "affine_apply",
    "conjugate_solution",
    "constant",
    "falling_factorial_check",
    "goldbach_family",
    "is_ideal",
    "pairing_mod_q",
    "translate",
    "verify_degree",
]
