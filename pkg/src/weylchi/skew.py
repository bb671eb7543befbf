"""Skew Young diagrams: connectivity, border strips, endpoints, vertical strips.

A border strip (ribbon, skew hook) is a connected skew shape containing no
2x2 square; "snake" is used for the connected case throughout this package.
Connectivity means edge adjacency: two cells are neighbours when they share
an edge, not merely a corner.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import Cell, Partition, PartitionError, as_partition, degree


@dataclass(frozen=True)
class SkewShape:
    """The set difference outer minus inner of two nested Young diagrams."""

    outer: Partition
    inner: Partition

    def __post_init__(self) -> None:
        outer = as_partition(self.outer)
        inner = as_partition(self.inner)
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        if len(inner) > len(outer) or any(
            inner[i] > outer[i] for i in range(len(inner))
        ):
            raise PartitionError(f"inner {inner} is not contained in outer {outer}")

    def size(self) -> int:
        return degree(self.outer) - degree(self.inner)


def cells(shape: SkewShape) -> frozenset[Cell]:
    """All (row, col) cells of the shape."""
    inner = shape.inner + (0,) * (len(shape.outer) - len(shape.inner))
    return frozenset(
        (row, col)
        for row, (outer_part, inner_part) in enumerate(zip(shape.outer, inner), 1)
        for col in range(inner_part + 1, outer_part + 1)
    )


def is_connected(shape: SkewShape) -> bool:
    """True iff the cells are nonempty and connected through shared edges."""
    remaining = set(cells(shape))
    if not remaining:
        return False
    stack = [remaining.pop()]
    while stack:
        row, col = stack.pop()
        for neighbour in ((row - 1, col), (row + 1, col), (row, col - 1), (row, col + 1)):
            if neighbour in remaining:
                remaining.remove(neighbour)
                stack.append(neighbour)
    return not remaining


def has_two_by_two(shape: SkewShape) -> bool:
    """True iff some 2x2 square of cells lies entirely inside the shape."""
    cell_set = cells(shape)
    return any(
        (row, col + 1) in cell_set
        and (row + 1, col) in cell_set
        and (row + 1, col + 1) in cell_set
        for row, col in cell_set
    )


def is_border_strip(shape: SkewShape) -> bool:
    """Connected and free of 2x2 squares."""
    return is_connected(shape) and not has_two_by_two(shape)


def right_endpoint(shape: SkewShape) -> Cell:
    """Rightmost cell of the top row."""
    cell_set = cells(shape)
    if not cell_set:
        raise PartitionError("empty skew shape has no endpoints")
    top = min(row for row, _ in cell_set)
    return (top, max(col for row, col in cell_set if row == top))


def left_endpoint(shape: SkewShape) -> Cell:
    """Leftmost cell of the bottom row."""
    cell_set = cells(shape)
    if not cell_set:
        raise PartitionError("empty skew shape has no endpoints")
    bottom = max(row for row, _ in cell_set)
    return (bottom, min(col for row, col in cell_set if row == bottom))


def row_count(shape: SkewShape) -> int:
    """Number of rows containing at least one cell."""
    return len({row for row, _ in cells(shape)})


def ascii_rows(shape: SkewShape) -> list[str]:
    """Rows of '.' (inner diagram) and '#' (cells), top row first."""
    inner = shape.inner + (0,) * (len(shape.outer) - len(shape.inner))
    return [
        "." * inner_part + "#" * (outer_part - inner_part)
        for outer_part, inner_part in zip(shape.outer, inner)
    ]


def _equal_part_blocks(p: Partition) -> list[tuple[int, int]]:
    blocks: list[tuple[int, int]] = []
    for part in p:
        if blocks and blocks[-1][0] == part:
            blocks[-1] = (part, blocks[-1][1] + 1)
        else:
            blocks.append((part, 1))
    return blocks


def vertical_strip_removals(mu: Partition, t: int) -> list[Partition]:
    """All partitions nu inside mu with mu/nu a vertical strip of t boxes.

    A vertical strip has at most one box per row, so within each run of equal
    parts only a suffix of rows can shrink by one box; the strips correspond
    to allocations of t over the runs. Results are sorted lexicographically
    decreasing; the list is empty when no strip of size t fits.
    """
    mu = as_partition(mu)
    if t < 1:
        raise PartitionError(f"strip size must be positive, got {t}")
    blocks = _equal_part_blocks(mu)
    results: list[Partition] = []

    def allocate(index: int, remaining: int, chosen: list[int]) -> None:
        if index == len(blocks):
            if remaining == 0:
                parts: list[int] = []
                for (value, count), taken in zip(blocks, chosen):
                    parts.extend([value] * (count - taken))
                    parts.extend([value - 1] * taken)
                results.append(tuple(part for part in parts if part > 0))
            return
        _, count = blocks[index]
        for taken in range(min(count, remaining) + 1):
            allocate(index + 1, remaining - taken, chosen + [taken])

    allocate(0, t, [])
    return sorted(results, reverse=True)


def vertical_strip_additions(base: Partition, t: int) -> list[Partition]:
    """All partitions containing base whose difference is a vertical strip of t boxes.

    New rows of length one below the diagram are allowed. Dually to removals,
    only a prefix of each run of equal parts can grow by one box. Results are
    sorted lexicographically decreasing.
    """
    base = as_partition(base)
    if t < 1:
        raise PartitionError(f"strip size must be positive, got {t}")
    blocks = _equal_part_blocks(base)
    results: list[Partition] = []

    def allocate(index: int, remaining: int, chosen: list[int]) -> None:
        if index == len(blocks):
            parts: list[int] = []
            for (value, count), taken in zip(blocks, chosen):
                parts.extend([value + 1] * taken)
                parts.extend([value] * (count - taken))
            parts.extend([1] * remaining)
            results.append(tuple(parts))
            return
        _, count = blocks[index]
        for taken in range(min(count, remaining) + 1):
            allocate(index + 1, remaining - taken, chosen + [taken])

    allocate(0, t, [])
    return sorted(results, reverse=True)
