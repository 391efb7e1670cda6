"""Affine equivalence of ideal solutions over Q(i)."""

from __future__ import annotations

from collections import Counter
from typing import List, Sequence, Tuple

from ..gint import GaussianInt, GaussianRational, is_nth_power
from .models import AffineMap, PteSolution, SolutionError
from .operations import constant

EquivalenceKey = Tuple[Tuple[Tuple[int, int, int], ...], Tuple[Tuple[int, int, int], ...]]


def _centered(s: PteSolution) -> Tuple[List[GaussianInt], List[GaussianInt]]:
    # n * (v - centroid) keeps everything integral
    total = sum(s.x, GaussianInt())
    return [v * s.n - total for v in s.x], [v * s.n - total for v in s.y]


def _scaled(values: Sequence[GaussianInt], scale: GaussianRational) -> Counter:
    return Counter(scale * v for v in values)


def equivalence_key(s: PteSolution) -> EquivalenceKey:
    """A canonical form shared by exactly the affinely equivalent solutions.

    Swapping ``x`` and ``y`` is treated as part of the equivalence.
    """

    centered_x, centered_y = _centered(s)
    candidates = []
    for first, second in ((centered_x, centered_y), (centered_y, centered_x)):
        for alpha in {v for v in first + second if v}:
            inverse = GaussianRational(alpha).reciprocal()
            candidates.append(
                (
                    tuple(sorted((inverse * v).sort_key() for v in first)),
                    tuple(sorted((inverse * v).sort_key() for v in second)),
                )
            )
    if not candidates:
        raise SolutionError("degenerate solution: every element coincides")
    return min(candidates)


def _find_scale(
    a_first: Sequence[GaussianInt],
    a_second: Sequence[GaussianInt],
    b_first: Sequence[GaussianInt],
    b_second: Sequence[GaussianInt],
) -> GaussianRational | None:
    alpha_in_first = next((v for v in a_first if v), None)
    if alpha_in_first is not None:
        alpha, targets = alpha_in_first, b_first
    else:
        alpha = next((v for v in a_second if v), None)
        if alpha is None:
            raise SolutionError("degenerate solution: every element coincides")
        targets = b_second
    want_first = Counter(GaussianRational(v) for v in b_first)
    want_second = Counter(GaussianRational(v) for v in b_second)
    for beta in sorted({v for v in targets if v}, key=GaussianInt.sort_key):
        scale = GaussianRational(beta) / alpha
        if _scaled(a_first, scale) == want_first and _scaled(a_second, scale) == want_second:
            return scale
    return None


def equivalent(a: PteSolution, b: PteSolution) -> AffineMap | None:
    """Return ``f`` with ``f(a) == b`` (possibly with ``b``'s sides swapped), else ``None``."""

    if a.n != b.n:
        raise SolutionError(f"sizes differ: {a.n} and {b.n}")
    ratio = GaussianRational(constant(b)) / constant(a)
    direct = is_nth_power(ratio, a.n)
    swapped = is_nth_power(-ratio, a.n)
    if not (direct or swapped):
        return None

    a_x, a_y = _centered(a)
    b_x, b_y = _centered(b)
    pairings = []
    if direct:
        pairings.append((b_x, b_y, b.x))
    if swapped:
        pairings.append((b_y, b_x, b.y))
    total_a = sum(a.x, GaussianInt())
    for b_first, b_second, b_target in pairings:
        scale = _find_scale(a_x, a_y, b_first, b_second)
        if scale is None:
            continue
        total_b = sum(b_target, GaussianInt())
        shift = (GaussianRational(total_b) - scale * total_a) / a.n
        return AffineMap(scale, shift)
    return None


__all__ = ["EquivalenceKey", "equivalence_key", "equivalent"]
