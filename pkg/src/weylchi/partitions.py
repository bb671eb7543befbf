"""Integer partitions in canonical form, with dominance order and diagram geometry.

A partition is a tuple of weakly decreasing positive integers with no trailing
zeros; the empty tuple is the empty partition. Cells of the Young diagram are
(row, col) pairs, 1-based, row 1 on top. All functions are pure and all values
immutable, so everything here is safe to share across threads or processes.
"""

from __future__ import annotations

import os
from collections.abc import Iterable, Iterator
from itertools import zip_longest

Partition = tuple[int, ...]
Cell = tuple[int, int]

DEFAULT_ENUMERATION_BOUND = 64
ENUMERATION_BOUND_ENV = "WEYLCHI_MAX_DEGREE"


class PartitionError(ValueError):
    """Malformed partition, cell outside a diagram, or parameter above a bound."""


def as_partition(parts: Iterable[int]) -> Partition:
    """Canonicalize to a tuple, dropping trailing zeros.

    Raises PartitionError unless the remaining entries are positive and
    weakly decreasing.
    """
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    for i, part in enumerate(p):
        if part <= 0:
            raise PartitionError(f"parts must be positive, got {part} in {p}")
        if i > 0 and p[i - 1] < part:
            raise PartitionError(f"parts must be weakly decreasing, got {p}")
    return p


def degree(p: Partition) -> int:
    """Total number of boxes."""
    return sum(p)


def conjugate(p: Partition) -> Partition:
    """Transpose the Young diagram (swap rows and columns)."""
    if not p:
        return ()
    return tuple(sum(1 for part in p if part >= col) for col in range(1, p[0] + 1))


def dominates_strictly(mu: Partition, lam: Partition) -> bool:
    """True iff mu < lam in the dominance order.

    Requires equal degree; partitions of different degree are incomparable.
    """
    if mu == lam or sum(mu) != sum(lam):
        return False
    mu_sum = lam_sum = 0
    for mu_part, lam_part in zip_longest(mu, lam, fillvalue=0):
        mu_sum += mu_part
        lam_sum += lam_part
        if mu_sum > lam_sum:
            return False
    return True


def intersect(mu: Partition, lam: Partition) -> Partition:
    """Componentwise minimum: the intersection of the two diagrams."""
    return tuple(min(a, b) for a, b in zip(mu, lam))


def complement(p: Partition, rows: int, width: int) -> Partition:
    """Complement of p inside a rows x width rectangle (rotated by 180 degrees)."""
    if rows < 1:
        raise PartitionError(f"rectangle needs at least one row, got {rows}")
    if width < 0:
        raise PartitionError(f"rectangle width must be nonnegative, got {width}")
    p = as_partition(p)
    if len(p) > rows or (p and p[0] > width):
        raise PartitionError(f"{p} does not fit in a {rows}x{width} rectangle")
    padded = p + (0,) * (rows - len(p))
    return as_partition(width - padded[rows - i] for i in range(1, rows + 1))


def hook_length(p: Partition, cell: Cell) -> int:
    """Hook length of a cell: arm + leg + 1."""
    row, col = cell
    if row < 1 or col < 1 or row > len(p) or col > p[row - 1]:
        raise PartitionError(f"cell {cell} lies outside {p}")
    arm = p[row - 1] - col
    leg = conjugate(p)[col - 1] - row
    return arm + leg + 1


def remove_first_column(p: Partition) -> Partition:
    """Drop the first column: every part shrinks by one, empty rows vanish."""
    return tuple(part - 1 for part in p if part > 1)


def strip_common_border(mu: Partition, lam: Partition) -> tuple[Partition, Partition]:
    """Strip shared first rows and shared first columns from both diagrams.

    Repeats until the results differ both in first-row length and in number
    of parts. For equal-degree strictly dominated inputs this preserves
    degree equality and strict dominance.
    """
    while mu and lam:
        if mu[0] == lam[0]:
            mu, lam = mu[1:], lam[1:]
        elif len(mu) == len(lam):
            mu, lam = remove_first_column(mu), remove_first_column(lam)
        else:
            break
    return mu, lam


def enumeration_bound() -> int:
    """Largest degree enumerate_partitions accepts; WEYLCHI_MAX_DEGREE raises it."""
    raw = os.environ.get(ENUMERATION_BOUND_ENV)
    if raw is None:
        return DEFAULT_ENUMERATION_BOUND
    try:
        return max(DEFAULT_ENUMERATION_BOUND, int(raw))
    except ValueError:
        raise PartitionError(f"{ENUMERATION_BOUND_ENV} must be an integer, got {raw!r}")


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """All partitions of n, each once, in lexicographically decreasing order."""
    if n < 0:
        raise PartitionError(f"cannot partition a negative number: {n}")
    bound = enumeration_bound()
    if n > bound:
        raise PartitionError(f"degree {n} exceeds the enumeration bound {bound}")
    return _descending_partitions(n)


def _descending_partitions(n: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    current = [n]
    while True:
        yield tuple(current)
        # decrement the rightmost part above 1, then refill greedily
        k = len(current) - 1
        while k >= 0 and current[k] == 1:
            k -= 1
        if k < 0:
            return
        current[k] -= 1
        remaining = len(current) - k - 1 + 1
        del current[k + 1:]
        cap = current[k]
        while remaining > 0:
            part = min(cap, remaining)
            current.append(part)
            remaining -= part


def parse_partition(text: str) -> Partition:
    """Parse "3,2,1"; exponent shorthand "3,1^4" repeats a part; "" or "0" is empty."""
    s = text.strip()
    if s in ("", "0"):
        return ()
    parts: list[int] = []
    for token in s.split(","):
        token = token.strip()
        base_text, caret, count_text = token.partition("^")
        try:
            base = int(base_text)
            count = int(count_text) if caret else 1
        except ValueError:
            raise PartitionError(f"cannot parse partition token {token!r} in {text!r}")
        if count < 0:
            raise PartitionError(f"negative repeat count in {token!r}")
        parts.extend([base] * count)
    return as_partition(parts)


def format_partition(p: Partition) -> str:
    """Inverse of parse_partition; the empty partition prints as "0"."""
    return ",".join(str(part) for part in p) if p else "0"
