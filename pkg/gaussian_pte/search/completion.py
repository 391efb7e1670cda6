"""Reconstruct full solutions from enumerated prefixes.

Given part of ``X`` and part of ``Y``, the identity ``P(z) - Q(z) = C`` fixes
the constant and the remaining roots. All of the rejection work runs on plain
integer pairs; Gaussian integer objects are only built for accepted candidates.
"""

from __future__ import annotations

from math import lcm
from typing import List, Sequence, Tuple

from ..gint import GaussianInt, sqrt_exact
from ..pte import PteSolution, verify_degree
from ..symfunc import DEFAULT_BUDGET_BITS, Polynomial, expand_roots, gaussian_roots
from .config import SearchConfig, SearchMode
from .sieve import Prefix, PrefixError

Pair = Tuple[int, int]
Coefficients = List[Pair]

ONE_PAIR: Pair = (1, 0)


class SearchInconsistencyError(RuntimeError):
    """A completed candidate failed verification; this signals an engine bug."""


# Integer kernel -----------------------------------------------------------------


def _mul(a: Pair, b: Pair) -> Pair:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _sub(a: Pair, b: Pair) -> Pair:
    return (a[0] - b[0], a[1] - b[1])


def _pair(z: GaussianInt) -> Pair:
    return (z.re, z.im)


def _product(values: Sequence[Pair]) -> Pair:
    result = ONE_PAIR
    for v in values:
        result = _mul(result, v)
    return result


def _exact_quotient(a: Pair, b: Pair) -> Pair | None:
    """``a / b`` when ``b`` divides ``a``, else ``None``."""

    scaled = _mul(a, (b[0], -b[1]))
    modulus = b[0] * b[0] + b[1] * b[1]
    if scaled[0] % modulus or scaled[1] % modulus:
        return None
    return (scaled[0] // modulus, scaled[1] // modulus)


def _harmonic_constant(weights: Sequence[Pair]) -> Pair | None:
    """``1 / sum(1/d)`` when it is a nonzero Gaussian integer, else ``None``."""

    numerator = _product(weights)
    denominator = (0, 0)
    for j in range(len(weights)):
        term = _product([d for l, d in enumerate(weights) if l != j])
        denominator = (denominator[0] + term[0], denominator[1] + term[1])
    if denominator == (0, 0) or numerator == (0, 0):
        return None
    return _exact_quotient(numerator, denominator)


def _times_linear(coeffs: Coefficients, root: Pair) -> Coefficients:
    """``coeffs * (z - root)``, coefficients listed from the constant term up."""

    result = [(0, 0)] * (len(coeffs) + 1)
    for i, c in enumerate(coeffs):
        shifted = result[i + 1]
        result[i + 1] = (shifted[0] + c[0], shifted[1] + c[1])
        term = _mul(c, root)
        result[i] = (result[i][0] - term[0], result[i][1] - term[1])
    return result


def _from_roots(roots: Sequence[Pair]) -> Coefficients:
    coeffs = [ONE_PAIR]
    for root in roots:
        coeffs = _times_linear(coeffs, root)
    return coeffs


def _multiply(a: Coefficients, b: Coefficients) -> Coefficients:
    result = [(0, 0)] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        for j, v in enumerate(b):
            term = _mul(u, v)
            current = result[i + j]
            result[i + j] = (current[0] + term[0], current[1] + term[1])
    return result


def _divide_by_roots(coeffs: Coefficients, roots: Sequence[Pair]) -> Coefficients | None:
    """Synthetic division by every ``z - root``; ``None`` on a nonzero remainder."""

    for root in roots:
        quotient: Coefficients = [(0, 0)] * (len(coeffs) - 1)
        carry = (0, 0)
        for i in range(len(coeffs) - 1, 0, -1):
            step = _mul(carry, root)
            carry = (coeffs[i][0] + step[0], coeffs[i][1] + step[1])
            quotient[i - 1] = carry
        step = _mul(carry, root)
        if (coeffs[0][0] + step[0], coeffs[0][1] + step[1]) != (0, 0):
            return None
        coeffs = quotient
    return coeffs


def _interpolate(nodes: Sequence[Pair], weights: Sequence[Pair], value: Pair) -> Coefficients | None:
    """``sum_j (value / w_j) * prod_{l != j} (z - node_l)`` when the sum has integral coefficients.

    The result is monic whenever ``value`` is the harmonic constant of ``weights``.
    """

    norms = [w[0] * w[0] + w[1] * w[1] for w in weights]
    common = lcm(*norms)
    total: Coefficients = [(0, 0)] * len(nodes)
    for j, (w, norm) in enumerate(zip(weights, norms)):
        scale = common // norm
        numerator = _mul(value, (w[0] * scale, -w[1] * scale))
        basis = _from_roots([node for l, node in enumerate(nodes) if l != j])
        for i, c in enumerate(basis):
            term = _mul(numerator, c)
            total[i] = (total[i][0] + term[0], total[i][1] + term[1])
    result = []
    for re, im in total:
        if re % common or im % common:
            return None
        result.append((re // common, im // common))
    if result[-1] != ONE_PAIR:
        return None
    return result


def _sqrt(value: Pair) -> Pair | None:
    root = sqrt_exact(GaussianInt(*value))
    return None if root is None else _pair(root)


def _roots(coeffs: Coefficients, budget_bits: int) -> List[Pair] | None:
    """All Gaussian-integer roots of a monic integral polynomial, or ``None`` if some root is not one."""

    degree = len(coeffs) - 1
    if degree == 0:
        return []
    if degree == 1:
        return [(-coeffs[0][0], -coeffs[0][1])]
    if degree == 2:
        (c0, c1), (b0, b1) = coeffs[0], coeffs[1]
        b2 = _mul((b0, b1), (b0, b1))
        root = _sqrt((b2[0] - 4 * c0, b2[1] - 4 * c1))
        if root is None or (root[0] - b0) % 2 or (root[1] - b1) % 2:
            return None
        return [((-b0 + root[0]) // 2, (-b1 + root[1]) // 2), ((-b0 - root[0]) // 2, (-b1 - root[1]) // 2)]
    polynomial = Polynomial(tuple(GaussianInt(*c) for c in coeffs))
    found = expand_roots(gaussian_roots(polynomial, budget_bits=budget_bits))
    if len(found) != degree:
        return None
    return [_pair(z) for z in found]


# Completion on plain values -------------------------------------------------------


def _complete_values(
    xs: Sequence[Pair],
    ys: Sequence[Pair],
    size: int,
    budget_bits: int,
) -> Tuple[List[Pair], List[Pair]] | None:
    """Extend ``xs`` and ``ys`` to size ``size`` with ``prod(z - x) - prod(z - y)`` constant."""

    k = len(ys)
    if len(xs) + k != size + 1:
        raise PrefixError(f"prefix of {len(xs)}+{k} values does not fit size {size}")
    if len(set(ys)) != k:
        raise PrefixError("prefix y values must be distinct")
    if set(xs) & set(ys):
        raise PrefixError("prefix x and y values must not meet")

    weights = []
    for j, y in enumerate(ys):
        at_y = _product([_sub(y, x) for x in xs])
        spread = _product([_sub(y, other) for l, other in enumerate(ys) if l != j])
        weights.append(_mul(at_y, spread))
    value = _harmonic_constant(weights)
    if value is None:
        return None

    # the cofactor T = P / R is monic of degree k-1 with T(y_j) = C / R(y_j)
    cofactor = _interpolate(ys, weights, value)
    if cofactor is None:
        return None
    more_x = _roots(cofactor, budget_bits)
    if more_x is None:
        return None

    full = _multiply(_from_roots(xs), cofactor)
    full[0] = _sub(full[0], value)
    rest = _divide_by_roots(full, ys)
    if rest is None:
        return None
    more_y = _roots(rest, budget_bits)
    if more_y is None:
        return None
    return list(xs) + more_x, list(ys) + more_y


def _solution(x: Sequence[Pair], y: Sequence[Pair]) -> PteSolution:
    return PteSolution(x=tuple(GaussianInt(*v) for v in x), y=tuple(GaussianInt(*v) for v in y))


def _checked(solution: PteSolution) -> PteSolution:
    degree = verify_degree(solution)
    if degree != solution.n - 1:
        raise SearchInconsistencyError(
            f"completed candidate has degree {degree}, expected {solution.n - 1}: {solution}"
        )
    return solution


def complete_general(
    prefix: Prefix, n: int, *, budget_bits: int = DEFAULT_BUDGET_BITS
) -> PteSolution | None:
    """Complete ``n - k + 1`` enumerated x values and ``k`` y values."""

    completed = _complete_values(
        [_pair(x) for x in prefix.xs], [_pair(y) for y in prefix.ys], n, budget_bits
    )
    if completed is None:
        return None
    return _checked(_solution(*completed))


def complete_sym_even(
    prefix: Prefix, n: int, *, budget_bits: int = DEFAULT_BUDGET_BITS
) -> PteSolution | None:
    """Complete base values ``a`` of ``X = {±a}`` and ``b`` of ``Y = {±b}`` through their squares."""

    half = n // 2
    given_x = [_pair(a) for a in prefix.xs]
    given_y = [_pair(b) for b in prefix.ys]
    completed = _complete_values(
        [_mul(a, a) for a in given_x], [_mul(b, b) for b in given_y], half, budget_bits
    )
    if completed is None:
        return None
    w_x, w_y = completed
    bases_x = given_x + [_sqrt(w) for w in w_x[len(given_x) :]]
    bases_y = given_y + [_sqrt(w) for w in w_y[len(given_y) :]]
    if any(b is None for b in bases_x + bases_y):
        return None
    x = [v for b in bases_x for v in (b, (-b[0], -b[1]))]  # type: ignore[index]
    y = [v for b in bases_y for v in (b, (-b[0], -b[1]))]  # type: ignore[index]
    return _checked(_solution(x, y))  # type: ignore[arg-type]


def complete_sym_odd(
    prefix: Prefix, n: int, *, budget_bits: int = DEFAULT_BUDGET_BITS
) -> PteSolution | None:
    """Complete ``(n+1)/2`` values of ``X`` for ``Y = -X``.

    ``P(z) = z*A(z^2) + K`` with ``A`` monic of degree ``(n-1)/2``, and ``C = 2K``.
    """

    xs = [_pair(x) for x in prefix.xs]
    half = (n - 1) // 2
    if len(xs) != half + 1:
        raise PrefixError(f"sym-odd prefix needs {half + 1} values, got {len(xs)}")
    squares = [_mul(x, x) for x in xs]
    if (0, 0) in xs or len(set(squares)) != len(squares):
        raise PrefixError("sym-odd prefix values must be nonzero with distinct squares")

    weights = []
    for i, (x, w) in enumerate(zip(xs, squares)):
        spread = _product([_sub(w, other) for j, other in enumerate(squares) if j != i])
        weights.append(_mul(x, spread))
    harmonic = _harmonic_constant(weights)
    if harmonic is None:
        return None

    # A(x_i^2) = -K / x_i with K = -harmonic
    even_part = _interpolate(squares, weights, harmonic)
    if even_part is None:
        return None
    full: Coefficients = [(-harmonic[0], -harmonic[1])]
    for c in even_part:
        full.extend([c, (0, 0)])
    full.pop()
    rest = _divide_by_roots(full, xs)
    if rest is None:
        return None
    more = _roots(rest, budget_bits)
    if more is None:
        return None
    x = xs + more
    return _checked(_solution(x, [(-v[0], -v[1]) for v in x]))


def complete(cfg: SearchConfig, prefix: Prefix) -> PteSolution | None:
    if cfg.mode is SearchMode.GENERAL:
        return complete_general(prefix, cfg.n, budget_bits=cfg.budget_bits)
    if cfg.mode is SearchMode.SYM_EVEN:
        return complete_sym_even(prefix, cfg.n, budget_bits=cfg.budget_bits)
    return complete_sym_odd(prefix, cfg.n, budget_bits=cfg.budget_bits)


__all__ = [
    "SearchInconsistencyError",
    "complete",
    "complete_general",
    "complete_sym_even",
    "complete_sym_odd",
]
