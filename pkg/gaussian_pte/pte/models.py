"""Data models for Prouhet-Tarry-Escott solutions and affine maps."""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Iterable, Tuple

from ..gint import ZERO, GaussianInt, GaussianRational, RationalLike


class SolutionError(ValueError):
    """Raised when a solution is malformed or unsuitable for an operation."""


class NotIdealError(SolutionError):
    """Raised when an operation needs an ideal solution and gets a weaker one."""


class NonIntegralImageError(SolutionError):
    """Raised when an affine map sends an element outside the Gaussian integers."""


def _canonical_multiset(values: Iterable[object]) -> Tuple[GaussianInt, ...]:
    return tuple(
        sorted((GaussianInt.coerce(v) for v in values), key=GaussianInt.sort_key)  # type: ignore[arg-type]
    )


@dataclass(frozen=True)
class PteSolution:
    """Two size-``n`` multisets ``x`` and ``y`` plus the degree they claim."""

    x: Tuple[GaussianInt, ...]
    y: Tuple[GaussianInt, ...]
    claimed_degree: int | None = None

    def __post_init__(self) -> None:
        x = _canonical_multiset(self.x)
        y = _canonical_multiset(self.y)
        if len(x) != len(y):
            raise SolutionError(f"multiset sizes differ: |X|={len(x)}, |Y|={len(y)}")
        if len(x) < 2:
            raise SolutionError("solutions need size at least 2")
        if x == y:
            raise SolutionError("X and Y must be distinct multisets")
        degree = len(x) - 1 if self.claimed_degree is None else operator.index(self.claimed_degree)
        if not 1 <= degree <= len(x) - 1:
            raise SolutionError(
                f"claimed degree {degree} outside 1..{len(x) - 1} for size {len(x)}"
            )
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "claimed_degree", degree)

    @property
    def n(self) -> int:
        return len(self.x)

    @property
    def claims_ideal(self) -> bool:
        return self.claimed_degree == self.n - 1

    def swapped(self) -> "PteSolution":
        return PteSolution(x=self.y, y=self.x, claimed_degree=self.claimed_degree)

    def sort_key(self) -> Tuple[object, ...]:
        return (
            self.n,
            tuple(v.sort_key() for v in self.x),
            tuple(v.sort_key() for v in self.y),
            self.claimed_degree,
        )


@dataclass(frozen=True)
class AffineMap:
    """The map ``z -> m*z + k_shift`` over the Gaussian rationals."""

    m: GaussianRational
    k_shift: GaussianRational = GaussianRational(ZERO)

    def __post_init__(self) -> None:
        m = GaussianRational.coerce(self.m)
        if not m:
            raise SolutionError("affine scale must be nonzero")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "k_shift", GaussianRational.coerce(self.k_shift))

    @classmethod
    def identity(cls) -> "AffineMap":
        return cls(GaussianRational(1))

    @classmethod
    def translation(cls, shift: RationalLike) -> "AffineMap":
        return cls(GaussianRational(1), GaussianRational.coerce(shift))

    def __call__(self, z: RationalLike) -> GaussianRational:
        return self.m * GaussianRational.coerce(z) + self.k_shift

    def compose(self, inner: "AffineMap") -> "AffineMap":
        """Return ``self o inner``."""

        return AffineMap(self.m * inner.m, self.m * inner.k_shift + self.k_shift)

    def inverse(self) -> "AffineMap":
        scale = self.m.reciprocal()
        return AffineMap(scale, -(self.k_shift * scale))

    def __str__(self) -> str:
        return f"m={self.m} k={self.k_shift}"


__all__ = [
    "AffineMap",
    "NonIntegralImageError",
    "NotIdealError",
    "PteSolution",
    "SolutionError",
]
