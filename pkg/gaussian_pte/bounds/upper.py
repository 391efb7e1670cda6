"""Upper bounds for ``C_n`` from the gcd of known constants."""

from __future__ import annotations

from typing import Iterable, List

from ..gint import GFactorization, factor, gcd
from ..pte import PteSolution, conjugate_solution, constant
from .primes import BoundsError


def corpus_gcd_upper_bound(
    solutions: Iterable[PteSolution], *, with_conjugates: bool = False
) -> GFactorization:
    """Factorization of the canonical gcd of the constants of ``solutions``."""

    pool: List[PteSolution] = list(solutions)
    if not pool:
        raise BoundsError("an upper bound needs at least one solution")
    sizes = {s.n for s in pool}
    if len(sizes) != 1:
        raise BoundsError(f"solutions of mixed sizes: {sorted(sizes)}")
    if with_conjugates:
        pool.extend(conjugate_solution(s) for s in list(pool))
    common = constant(pool[0])
    for s in pool[1:]:
        common = gcd(common, constant(s))
    return factor(gcd(common, 0))


__all__ = ["corpus_gcd_upper_bound"]
