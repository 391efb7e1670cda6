"""Line-oriented text format for solutions: ``n=<int>; [k=<int>;] X=...; Y=...``."""

from __future__ import annotations

import re
from typing import Iterable, List, Tuple

from ..gint import GaussianInt, GaussianIntError
from .models import PteSolution, SolutionError

_ELEMENT = re.compile(r"\(\s*[+-]?\d+\s*,\s*[+-]?\d+\s*\)")
_ELEMENT_LIST = re.compile(rf"^{_ELEMENT.pattern}(?:\s*,\s*{_ELEMENT.pattern})*$")


class SolutionParseError(SolutionError):
    """Raised for malformed solution text; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None) -> None:
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def _parse_elements(text: str) -> Tuple[GaussianInt, ...]:
    body = text.strip()
    if not body:
        return ()
    if _ELEMENT_LIST.match(body) is None:
        raise SolutionParseError(f"malformed element list {body!r}")
    return tuple(GaussianInt.parse(item) for item in _ELEMENT.findall(body))


def _parse_int(field_name: str, value: str) -> int:
    try:
        return int(value.strip())
    except ValueError as exc:
        raise SolutionParseError(f"{field_name} must be an integer, got {value.strip()!r}") from exc


def parse_solution(line: str) -> PteSolution:
    """Parse a single solution line."""

    fields = {}
    for part in line.split(";"):
        if not part.strip():
            continue
        key, sep, value = part.partition("=")
        key = key.strip()
        if not sep or key not in ("n", "k", "X", "Y"):
            raise SolutionParseError(f"unexpected field {part.strip()!r}")
        if key in fields:
            raise SolutionParseError(f"duplicate field {key!r}")
        fields[key] = value
    missing = [key for key in ("n", "X", "Y") if key not in fields]
    if missing:
        raise SolutionParseError(f"missing field(s): {', '.join(missing)}")

    n = _parse_int("n", fields["n"])
    x = _parse_elements(fields["X"])
    y = _parse_elements(fields["Y"])
    if len(x) != len(y):
        raise SolutionParseError(f"|X|={len(x)} and |Y|={len(y)} differ")
    if len(x) != n:
        raise SolutionParseError(f"n={n} but the multisets have size {len(x)}")
    degree = _parse_int("k", fields["k"]) if "k" in fields else None
    try:
        return PteSolution(x=x, y=y, claimed_degree=degree)
    except SolutionError as exc:
        raise SolutionParseError(str(exc)) from exc


def parse_solutions(text: str) -> List[PteSolution]:
    """Parse every non-blank, non-comment line of ``text``."""

    solutions = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            solutions.append(parse_solution(line))
        except (SolutionParseError, GaussianIntError) as exc:
            raise SolutionParseError(str(exc), line=number) from exc
    return solutions


def format_solution(s: PteSolution) -> str:
    fields = [f"n={s.n}"]
    if not s.claims_ideal:
        fields.append(f"k={s.claimed_degree}")
    fields.append("X=" + ",".join(str(v) for v in s.x))
    fields.append("Y=" + ",".join(str(v) for v in s.y))
    return "; ".join(fields)


def emit_solutions(solutions: Iterable[PteSolution]) -> str:
    """One line per solution in canonical order; empty input gives empty text."""

    ordered = sorted(solutions, key=PteSolution.sort_key)
    return "".join(format_solution(s) + "\n" for s in ordered)


__all__ = [
    "SolutionParseError",
    "emit_solutions",
    "format_solution",
    "parse_solution",
    "parse_solutions",
]
