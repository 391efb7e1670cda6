"""Collapse search results to one representative per equivalence class."""

from __future__ import annotations

from collections import defaultdict
from typing import Dict, Iterable, List, Sequence, Tuple

from ..gint import GaussianInt
from ..pte import PteSolution, conjugate_solution, equivalence_key, translate
from ..pte.equivalence import EquivalenceKey


def _representative_key(s: PteSolution) -> Tuple[object, ...]:
    lowest = min(s.x, key=GaussianInt.sort_key)
    shifted = translate(s, -lowest)
    return (
        tuple(v.sort_key() for v in shifted.x),
        tuple(v.sort_key() for v in shifted.y),
        s.sort_key(),
    )


def dedup_canonical(results: Iterable[PteSolution]) -> List[PteSolution]:
    """Keep the member of each class that is least once its ``x`` is shifted to start at 0.

    Conjugate classes stay separate; see :func:`conjugate_pairs`.
    """

    groups: Dict[EquivalenceKey, List[PteSolution]] = defaultdict(list)
    for s in results:
        groups[equivalence_key(s)].append(s)
    representatives = [min(group, key=_representative_key) for group in groups.values()]
    return sorted(representatives, key=PteSolution.sort_key)


def conjugate_pairs(representatives: Sequence[PteSolution]) -> List[Tuple[int, int]]:
    """Index pairs ``(i, j)``, ``i < j``, whose classes are complex conjugates of each other."""

    keys = [equivalence_key(s) for s in representatives]
    pairs = []
    for i, s in enumerate(representatives):
        mirrored = equivalence_key(conjugate_solution(s))
        pairs.extend((i, j) for j in range(i + 1, len(keys)) if keys[j] == mirrored)
    return pairs


__all__ = ["conjugate_pairs", "dedup_canonical"]
