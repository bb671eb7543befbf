"""Torsion Euler characteristic between integral Weyl modules of GL(n).

Two independent engines compute the same positive rational invariant for a
pair of partitions (mu, lam):

* ``chi_closed`` evaluates a closed form from border-strip geometry: when mu
  is strictly dominated by lam and both skew shapes against nu = mu `intersect`
  lam are snakes (connected border strips), the value is (ell/d)^((-1)^r)
  where ell is the strip length, d the sliding distance between the strips
  (a hook length in either diagram) and r the total number of nonempty strip
  rows. In every other case the value is 1.

* ``chi_recursive`` expands the pair through vertical-strip filtrations of
  the tensor product with an exterior power, terminating in the single-root
  case; a conjugate-symmetry swap escapes the one configuration where the
  expansion is not multiplicative.

The invariant is rank independent, so no GL rank is ever stored; partitions
are compared as abstract diagrams.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, replace
from typing import Literal, NamedTuple

from .factored import FactoredRational
from .partitions import (
    Partition,
    PartitionError,
    as_partition,
    conjugate,
    degree,
    dominates_strictly,
    hook_length,
    intersect,
    remove_first_column,
    strip_common_border,
)
from .skew import (
    SkewShape,
    is_border_strip,
    left_endpoint,
    right_endpoint,
    row_count,
    vertical_strip_additions,
    vertical_strip_removals,
)

ChiMethod = Literal["closed", "recursive", "both"]

TRIVIAL_DEGREE_MISMATCH = "degree_mismatch"
TRIVIAL_EQUAL = "equal"
TRIVIAL_NOT_COMPARABLE = "not_comparable"
TRIVIAL_NOT_SNAKES = "disconnected_or_overconnected"

DEFAULT_MAX_DEPTH = 10_000

# deep dominance chains nest Python frames beyond the interpreter default
sys.setrecursionlimit(max(sys.getrecursionlimit(), 20_000))


class ChiInternalError(RuntimeError):
    """An internal invariant of the computation failed; this is a bug, not bad input."""


class EngineMismatchError(RuntimeError):
    """The closed form and the recursive expansion disagree on a pair."""


class PositiveRootDelta(NamedTuple):
    """Row indices (i, j) with i < j for the weight difference e_i - e_j."""

    i: int
    j: int


@dataclass(frozen=True)
class SnakeParameters:
    """Border-strip geometry of a strictly dominated pair.

    nu is the intersection of the two diagrams, ell the common number of
    boxes in the two strips, d the distance the lower strip slides along the
    border to become the upper one, and r the total number of nonempty rows
    across both strips.
    """

    nu: Partition
    ell: int
    d: int
    r: int


@dataclass(frozen=True)
class ChiResult:
    value: FactoredRational
    method: str
    snake: SnakeParameters | None = None
    trivial_reason: str | None = None


def snake_parameters(mu: Partition, lam: Partition) -> SnakeParameters | None:
    """Geometry (nu, ell, d, r) when mu and lam differ by connected border strips.

    Returns None when the pair is not strictly dominated with equal degree,
    or when either skew shape against the intersection fails to be a snake.
    The distance d is cross-checked against its dual hook-length description;
    disagreement raises ChiInternalError.
    """
    mu = as_partition(mu)
    lam = as_partition(lam)
    if degree(mu) != degree(lam) or not dominates_strictly(mu, lam):
        return None
    nu = intersect(mu, lam)
    mu_strip = SkewShape(mu, nu)
    lam_strip = SkewShape(lam, nu)
    if not (is_border_strip(mu_strip) and is_border_strip(lam_strip)):
        return None
    ell = degree(lam) - degree(nu)
    r = row_count(mu_strip) + row_count(lam_strip)
    try:
        d = hook_length(mu, (left_endpoint(lam_strip)[0], left_endpoint(mu_strip)[1]))
        d_dual = hook_length(
            lam, (right_endpoint(lam_strip)[0], right_endpoint(mu_strip)[1])
        )
    except PartitionError as exc:
        raise ChiInternalError(
            f"snake hook cell fell outside its diagram for mu={mu} lam={lam}: {exc}"
        ) from exc
    if d != d_dual:
        raise ChiInternalError(
            f"snake distance mismatch for mu={mu} lam={lam}: {d} != {d_dual}"
        )
    return SnakeParameters(nu, ell, d, r)


def chi_closed(mu: Partition, lam: Partition) -> ChiResult:
    """The invariant by the closed border-strip formula."""
    mu = as_partition(mu)
    lam = as_partition(lam)
    one = FactoredRational.one()
    if degree(mu) != degree(lam):
        return ChiResult(one, "closed", None, TRIVIAL_DEGREE_MISMATCH)
    if mu == lam:
        return ChiResult(one, "closed", None, TRIVIAL_EQUAL)
    if not dominates_strictly(mu, lam):
        return ChiResult(one, "closed", None, TRIVIAL_NOT_COMPARABLE)
    snake = snake_parameters(mu, lam)
    if snake is None:
        return ChiResult(one, "closed", None, TRIVIAL_NOT_SNAKES)
    sign = -1 if snake.r % 2 else 1
    value = FactoredRational.from_ratio(snake.ell, snake.d).pow_sign(sign)
    return ChiResult(value, "closed", snake, None)


def single_root_delta(mu: Partition, lam: Partition) -> PositiveRootDelta | None:
    """Return (i, j) when lam equals mu plus one at row i and minus one at row j."""
    length = max(len(mu), len(lam))
    padded_mu = mu + (0,) * (length - len(mu))
    padded_lam = lam + (0,) * (length - len(lam))
    moved = [
        (row, padded_lam[row - 1] - padded_mu[row - 1])
        for row in range(1, length + 1)
        if padded_lam[row - 1] != padded_mu[row - 1]
    ]
    if len(moved) != 2:
        return None
    (i, up), (j, down) = moved
    if up == 1 and down == -1:
        return PositiveRootDelta(i, j)
    return None


def single_root_chi(mu: Partition, delta: PositiveRootDelta) -> FactoredRational:
    """Terminal value 1/(mu_i - mu_j + j - i + 1) for lam = mu plus a positive root."""
    mu_i = mu[delta.i - 1] if delta.i <= len(mu) else 0
    mu_j = mu[delta.j - 1] if delta.j <= len(mu) else 0
    return FactoredRational.from_ratio(1, mu_i - mu_j + delta.j - delta.i + 1)


_CACHE: dict[tuple[Partition, Partition], FactoredRational] = {}
# Transparent memo keyed on stripped pairs. Plain-dict writes of immutable
# values are safe under concurrent use; duplicated work is acceptable.


def clear_cache() -> None:
    _CACHE.clear()


def chi_recursive(
    mu: Partition,
    lam: Partition,
    *,
    column: int | None = None,
    max_depth: int | None = None,
) -> FactoredRational:
    """The invariant by recursive vertical-strip expansion.

    The expansion removes the first column of lam (length t), re-expands it
    through all vertical t-strip additions, and divides out the siblings;
    removals of t-strips from mu supply the other side. The single-root case
    terminates the recursion, and the one non-multiplicative configuration is
    escaped by conjugating both diagrams and swapping the pair, which cannot
    recur.

    ``column`` optionally selects a different column of lam to drive one
    expansion step (its height becomes t and lam loses the rightmost box of
    each of its top t rows). The escape characterization is unreliable for
    such steps, so if a swap would be needed the call falls back to the
    default expansion. Results are identical either way; the knob exists for
    experimentation.
    """
    mu = as_partition(mu)
    lam = as_partition(lam)
    budget = DEFAULT_MAX_DEPTH if max_depth is None else max_depth
    if column is not None:
        return _chi_by_column(mu, lam, column, budget)
    return _chi(mu, lam, True, budget)


def _chi(mu: Partition, lam: Partition, allow_swap: bool, budget: int) -> FactoredRational:
    if budget <= 0:
        raise ChiInternalError("recursion depth cap exceeded")
    if not dominates_strictly(mu, lam):
        return FactoredRational.one()
    mu, lam = strip_common_border(mu, lam)
    key = (mu, lam)
    cached = _CACHE.get(key)
    if cached is not None:
        return cached
    value = _expand(mu, lam, allow_swap, budget)
    _CACHE[key] = value
    return value


def _expand(mu: Partition, lam: Partition, allow_swap: bool, budget: int) -> FactoredRational:
    delta = single_root_delta(mu, lam)
    if delta is not None:
        return single_root_chi(mu, delta)
    t = len(lam)
    lam_core = remove_first_column(lam)
    siblings = vertical_strip_additions(lam_core, t)
    if mu in siblings:
        # the expansion is not multiplicative here; conjugate both diagrams
        # and swap the pair, which lands in a multiplicative configuration
        if not allow_swap:
            raise ChiInternalError(
                f"conjugate escape recurred for mu={mu} lam={lam}; "
                "this configuration should have terminated as a single root"
            )
        return _chi(conjugate(lam), conjugate(mu), False, budget - 1)
    value = FactoredRational.one()
    for smaller in vertical_strip_removals(mu, t):
        value = value.mul(_chi(smaller, lam_core, True, budget - 1))
    for sibling in siblings:
        if sibling != lam:
            value = value.mul(_chi(mu, sibling, True, budget - 1).inv())
    return value


def _chi_by_column(mu: Partition, lam: Partition, column: int, budget: int) -> FactoredRational:
    if not dominates_strictly(mu, lam):
        return FactoredRational.one()
    mu, lam = strip_common_border(mu, lam)
    delta = single_root_delta(mu, lam)
    if delta is not None:
        return single_root_chi(mu, delta)
    heights = conjugate(lam)
    if not 1 <= column <= len(heights):
        raise PartitionError(f"lam={lam} has no column {column}")
    t = heights[column - 1]
    lam_core = as_partition(
        part - 1 if row <= t else part for row, part in enumerate(lam, 1)
    )
    siblings = vertical_strip_additions(lam_core, t)
    if lam not in siblings:
        raise ChiInternalError(f"column expansion lost lam={lam} (column {column})")
    if mu in siblings:
        return _chi(mu, lam, True, budget)
    value = FactoredRational.one()
    for smaller in vertical_strip_removals(mu, t):
        value = value.mul(_chi(smaller, lam_core, True, budget - 1))
    for sibling in siblings:
        if sibling != lam:
            value = value.mul(_chi(mu, sibling, True, budget - 1).inv())
    return value


def chi(mu: Partition, lam: Partition, method: ChiMethod = "both") -> ChiResult:
    """Dispatch between the engines; "both" cross-checks them.

    With method "both" the two engines are evaluated independently and an
    EngineMismatchError carrying the full pair context is raised when they
    disagree; the closed result (with its geometry) is returned otherwise.
    """
    if method == "closed":
        return chi_closed(mu, lam)
    if method == "recursive":
        return ChiResult(chi_recursive(mu, lam), "recursive")
    if method != "both":
        raise ValueError(f"unknown method {method!r}")
    closed = chi_closed(mu, lam)
    recursive = chi_recursive(mu, lam)
    if closed.value != recursive:
        raise EngineMismatchError(
            f"engines disagree for mu={as_partition(mu)} lam={as_partition(lam)}: "
            f"closed={closed.value.render()} recursive={recursive.render()}"
        )
    return replace(closed, method="both")


def chi_nine_table(mu: Partition, lam: Partition) -> dict[str, FactoredRational]:
    """Invariant for every pairing of the Weyl, dual Weyl and cokernel families.

    With c1 the Weyl-pair value for (mu, lam) and c2 for (lam, mu), every
    other pairing is determined. Keys name (first family, second family); all
    entries pair mu-labelled with lam-labelled modules in that order except
    "H,H", which is for the swapped arguments (H(lam), H(mu)).
    """
    c1 = chi_closed(mu, lam).value
    c2 = chi_closed(lam, mu).value
    one = FactoredRational.one()
    return {
        "V,H": one,
        "Q,Q": one,
        "V,V": c1,
        "H,H": c1,
        "V,Q": c1.inv(),
        "Q,H": c1,
        "H,Q": c1.inv(),
        "Q,V": c1,
        "H,V": c1.mul(c2),
    }
