"""Invariant sweeps: every identity the engines must satisfy, as batch checks.

Each check builds a deterministic list of (mu, lam) items and evaluates them
independently, so items can be fanned out across worker processes; results
are reassembled in item order, making reports identical for any --jobs value.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor

from . import sumformula
from .chi import (
    chi_closed,
    chi_nine_table,
    chi_recursive,
    snake_parameters,
)
from .factored import FactoredRational
from .partitions import (
    Partition,
    as_partition,
    complement,
    conjugate,
    dominates_strictly,
    enumerate_partitions,
    hook_length,
    strip_common_border,
)
from .report import Failure, VerificationReport
from .skew import SkewShape, left_endpoint, right_endpoint

CHECK_NAMES = [
    "equivalence",
    "conjugate",
    "complement",
    "gl2",
    "hooks",
    "single-root",
    "triviality",
    "stripping",
    "manhattan",
    "nine-table",
    "howe",
]

UNEQUAL_DEGREE_CAP = 8  # triviality sweeps cap the unequal-degree grid here

_MIN_ITEMS_PER_CHUNK = 64

Pair = tuple[Partition, Partition]


def _equal_degree_pairs(max_degree: int) -> list[Pair]:
    pairs: list[Pair] = []
    for n in range(max_degree + 1):
        parts = list(enumerate_partitions(n))
        pairs.extend((mu, lam) for lam in parts for mu in parts)
    return pairs


def _dominated_pairs(max_degree: int) -> list[Pair]:
    return [
        (mu, lam)
        for mu, lam in _equal_degree_pairs(max_degree)
        if dominates_strictly(mu, lam)
    ]


def _gl2_items(max_degree: int) -> list[Pair]:
    return [
        ((a, b), (a + b,))
        for total in range(2, max_degree + 1)
        for b in range(1, total // 2 + 1)
        for a in (total - b,)
        if b <= a
    ]


def _hook_items(max_degree: int) -> list[Pair]:
    items: list[Pair] = []
    for total in range(2, max_degree + 1):
        for a in range(1, total):
            b = total - a
            for s in range(1, b + 1):
                items.append((as_partition((a,) + (1,) * b), as_partition((a + s,) + (1,) * (b - s))))
    return items


def _single_root_items(max_degree: int) -> list[Pair]:
    items: list[Pair] = []
    for n in range(2, max_degree + 1):
        for mu in enumerate_partitions(n):
            for i in range(1, len(mu) + 1):
                for j in range(i + 1, len(mu) + 1):
                    moved = list(mu)
                    moved[i - 1] += 1
                    moved[j - 1] -= 1
                    if min(moved) >= 0 and all(
                        moved[k] >= moved[k + 1] for k in range(len(moved) - 1)
                    ):
                        items.append((mu, as_partition(moved)))
    return items


def _triviality_items(max_degree: int) -> list[Pair]:
    items = [
        (mu, lam)
        for mu, lam in _equal_degree_pairs(max_degree)
        if not dominates_strictly(mu, lam)
    ]
    cap = min(max_degree, UNEQUAL_DEGREE_CAP)
    small = [p for n in range(cap + 1) for p in enumerate_partitions(n)]
    items.extend(
        (mu, lam) for lam in small for mu in small if sum(mu) != sum(lam)
    )
    return items


def _eval_equivalence(mu: Partition, lam: Partition) -> str | None:
    closed = chi_closed(mu, lam).value
    recursive = chi_recursive(mu, lam)
    if closed != recursive:
        return f"closed={closed.render()} recursive={recursive.render()}"
    return None


def _eval_conjugate(mu: Partition, lam: Partition) -> str | None:
    direct = chi_closed(mu, lam).value
    swapped = chi_closed(conjugate(lam), conjugate(mu)).value
    if direct != swapped:
        return f"chi={direct.render()} conjugate-swapped={swapped.render()}"
    return None


def _eval_complement(mu: Partition, lam: Partition) -> str | None:
    rows, width = sumformula.minimal_rectangle(mu, lam)
    direct = chi_closed(mu, lam).value
    comp = chi_closed(complement(mu, rows, width), complement(lam, rows, width)).value
    if direct != comp:
        return f"chi={direct.render()} complemented={comp.render()}"
    return None


def _eval_gl2(mu: Partition, lam: Partition) -> str | None:
    a, b = mu
    expected = FactoredRational.from_ratio(b, a + 1)
    return _both_engines_equal(mu, lam, expected)


def _eval_hooks(mu: Partition, lam: Partition) -> str | None:
    a, b = mu[0], len(mu) - 1
    s = lam[0] - mu[0]
    expected = FactoredRational.from_ratio(a + b, s).pow_sign(-1 if s % 2 else 1)
    return _both_engines_equal(mu, lam, expected)


def _both_engines_equal(
    mu: Partition, lam: Partition, expected: FactoredRational
) -> str | None:
    closed = chi_closed(mu, lam).value
    if closed != expected:
        return f"closed={closed.render()} expected={expected.render()}"
    recursive = chi_recursive(mu, lam)
    if recursive != expected:
        return f"recursive={recursive.render()} expected={expected.render()}"
    return None


def _eval_single_root(mu: Partition, lam: Partition) -> str | None:
    length = max(len(mu), len(lam))
    padded_mu = mu + (0,) * (length - len(mu))
    padded_lam = lam + (0,) * (length - len(lam))
    i = next(r for r in range(length) if padded_lam[r] == padded_mu[r] + 1) + 1
    j = next(r for r in range(length) if padded_lam[r] == padded_mu[r] - 1) + 1
    mu_j = padded_mu[j - 1]
    expected = FactoredRational.from_ratio(1, padded_mu[i - 1] - mu_j + j - i + 1)
    detail = _both_engines_equal(mu, lam, expected)
    if detail is not None:
        return detail
    stripped_mu, _ = strip_common_border(mu, lam)
    hook = hook_length(stripped_mu, (1, 1))
    if expected != FactoredRational.from_ratio(1, hook):
        return f"corner hook {hook} disagrees with expected={expected.render()}"
    return None


def _eval_triviality(mu: Partition, lam: Partition) -> str | None:
    # every pair has at least one non-dominated order, so unit values here
    # are exactly the one-sidedness of the invariant
    result = chi_closed(mu, lam)
    if not result.value.is_unit:
        return f"closed={result.value.render()} on a non-dominated pair"
    if result.trivial_reason is None:
        return "closed engine reported no triviality reason"
    if not chi_recursive(mu, lam).is_unit:
        return "recursive engine nontrivial on a non-dominated pair"
    return None


def _eval_stripping(mu: Partition, lam: Partition) -> str | None:
    direct = chi_closed(mu, lam).value
    stripped = chi_closed(*strip_common_border(mu, lam)).value
    if direct != stripped:
        return f"chi={direct.render()} stripped={stripped.render()}"
    return None


def _eval_manhattan(mu: Partition, lam: Partition) -> str | None:
    snake = snake_parameters(mu, lam)
    if snake is None:
        return None
    mu_strip = SkewShape(mu, snake.nu)
    lam_strip = SkewShape(lam, snake.nu)
    re_mu, re_lam = right_endpoint(mu_strip), right_endpoint(lam_strip)
    le_mu, le_lam = left_endpoint(mu_strip), left_endpoint(lam_strip)
    by_right = (re_lam[1] - re_mu[1]) + (re_mu[0] - re_lam[0])
    by_left = (le_lam[1] - le_mu[1]) + (le_mu[0] - le_lam[0])
    if snake.d != by_right or snake.d != by_left:
        return f"d={snake.d} right-displacement={by_right} left-displacement={by_left}"
    return None


def _eval_nine_table(mu: Partition, lam: Partition) -> str | None:
    table = chi_nine_table(mu, lam)
    c1 = chi_closed(mu, lam).value
    c2 = chi_closed(lam, mu).value
    one = FactoredRational.one()
    expected = {
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
    for key, want in expected.items():
        if table[key] != want:
            return f"entry {key}={table[key].render()} expected {want.render()}"
    if chi_nine_table(lam, mu)["H,V"] != table["H,V"]:
        return "H,V entry not symmetric under swapping the pair"
    return None


def _eval_howe(mu: Partition, lam: Partition) -> str | None:
    return sumformula.howe_pair_failure(mu, lam)


_ITEMS = {
    "equivalence": _equal_degree_pairs,
    "conjugate": _equal_degree_pairs,
    "complement": _equal_degree_pairs,
    "gl2": _gl2_items,
    "hooks": _hook_items,
    "single-root": _single_root_items,
    "triviality": _triviality_items,
    "stripping": _dominated_pairs,
    "manhattan": _equal_degree_pairs,
    "nine-table": _equal_degree_pairs,
    "howe": _dominated_pairs,
}

_EVALUATORS = {
    "equivalence": _eval_equivalence,
    "conjugate": _eval_conjugate,
    "complement": _eval_complement,
    "gl2": _eval_gl2,
    "hooks": _eval_hooks,
    "single-root": _eval_single_root,
    "triviality": _eval_triviality,
    "stripping": _eval_stripping,
    "manhattan": _eval_manhattan,
    "nine-table": _eval_nine_table,
    "howe": _eval_howe,
}


def _eval_chunk(payload: tuple[str, list[Pair]]) -> list[Failure]:
    name, items = payload
    evaluate = _EVALUATORS[name]
    failures: list[Failure] = []
    for mu, lam in items:
        detail = evaluate(mu, lam)
        if detail is not None:
            failures.append((mu, lam, detail))
    return failures


def run_check(name: str, max_degree: int, jobs: int = 1) -> VerificationReport:
    """Run one named sweep; the report is independent of the jobs setting."""
    if name not in _ITEMS:
        raise ValueError(f"unknown check name: {name}")
    items = _ITEMS[name](max_degree)
    start = time.perf_counter()
    failures: list[Failure] = []
    if jobs <= 1 or len(items) < 2 * _MIN_ITEMS_PER_CHUNK:
        failures = _eval_chunk((name, items))
    else:
        chunk_size = max(_MIN_ITEMS_PER_CHUNK, len(items) // (jobs * 4))
        chunks = [items[i : i + chunk_size] for i in range(0, len(items), chunk_size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for chunk_failures in pool.map(
                _eval_chunk, [(name, chunk) for chunk in chunks]
            ):
                failures.extend(chunk_failures)
    return VerificationReport(name, len(items), failures, time.perf_counter() - start)


def run_checks(
    names: list[str], max_degree: int, jobs: int = 1
) -> list[VerificationReport]:
    return [run_check(name, max_degree, jobs) for name in names]
