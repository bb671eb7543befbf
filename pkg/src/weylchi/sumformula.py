"""Jantzen sum-formula multiplicities derived from the torsion Euler characteristic.

For a fixed highest weight lam, the multiplicity of the Weyl character of mu
at the prime p is b = -v_p(chi(mu, lam)); tabulating over all mu of the same
degree gives the full sum formula in the Weyl-character basis. Weights are
pure partition labels here; no characters are expanded.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .chi import chi_closed
from .factored import is_prime
from .partitions import (
    Partition,
    as_partition,
    complement,
    conjugate,
    degree,
    dominates_strictly,
    enumerate_partitions,
    format_partition,
)
from .report import VerificationReport


@dataclass(frozen=True)
class SumFormulaRow:
    mu: Partition
    b: dict[int, int]


@dataclass(frozen=True)
class SumFormulaTable:
    lam: Partition
    rows: tuple[SumFormulaRow, ...]


def b_coefficient(lam: Partition, mu: Partition, p: int) -> int:
    """Multiplicity of the Weyl character of mu at prime p in the table for lam.

    May be negative: the invariant exceeds 1 on some pairs, so signs are
    reported exactly as computed.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return -chi_closed(mu, lam).value.valuation(p)


def sum_formula_table(lam: Partition, prime_filter: int | None = None) -> SumFormulaTable:
    """Rows (mu, b) for every strictly dominated mu with a nontrivial invariant.

    Rows follow the enumeration order of partitions of the degree of lam
    (lexicographically decreasing). With prime_filter set, b is restricted to
    that prime and rows that become empty are dropped.
    """
    lam = as_partition(lam)
    if prime_filter is not None and not is_prime(prime_filter):
        raise ValueError(f"{prime_filter} is not prime")
    rows: list[SumFormulaRow] = []
    for mu in enumerate_partitions(degree(lam)):
        if not dominates_strictly(mu, lam):
            continue
        value = chi_closed(mu, lam).value
        if value.is_unit:
            continue
        b = {p: -e for p, e in sorted(value.factors.items())}
        if prime_filter is not None:
            b = {prime_filter: b[prime_filter]} if prime_filter in b else {}
        if b:
            rows.append(SumFormulaRow(mu, b))
    return SumFormulaTable(lam, tuple(rows))


def table_text(table: SumFormulaTable) -> str:
    """One row per line: "mu=2,1  b: 3^1"."""
    return "\n".join(
        f"mu={format_partition(row.mu)}  b: "
        + " ".join(f"{p}^{e}" for p, e in sorted(row.b.items()))
        for row in table.rows
    )


def table_json_dict(table: SumFormulaTable) -> dict:
    return {
        "lambda": list(table.lam),
        "rows": [
            {"mu": list(row.mu), "b": {str(p): e for p, e in sorted(row.b.items())}}
            for row in table.rows
        ],
    }


def minimal_rectangle(mu: Partition, lam: Partition) -> tuple[int, int]:
    """Smallest (rows, width) rectangle enclosing both diagrams."""
    rows = max(len(mu), len(lam), 1)
    width = max(mu[0] if mu else 0, lam[0] if lam else 0)
    return rows, width


def howe_pair_failure(mu: Partition, lam: Partition) -> str | None:
    """Check b-coefficients of one pair against conjugation and complementation.

    Conjugation reverses the pair (the table for the conjugate of mu gains the
    row of the conjugate of lam); complements are taken in the minimal
    enclosing rectangle. Returns a description of the first failing prime, or
    None when every prime in any of the three supports agrees.
    """
    value = chi_closed(mu, lam).value
    mu_conj, lam_conj = conjugate(mu), conjugate(lam)
    rows, width = minimal_rectangle(mu, lam)
    mu_comp = complement(mu, rows, width)
    lam_comp = complement(lam, rows, width)
    conj_value = chi_closed(lam_conj, mu_conj).value
    comp_value = chi_closed(mu_comp, lam_comp).value
    primes = sorted(
        set(value.factors) | set(conj_value.factors) | set(comp_value.factors)
    )
    for p in primes:
        b = -value.valuation(p)
        b_conj = b_coefficient(mu_conj, lam_conj, p)
        b_comp = b_coefficient(lam_comp, mu_comp, p)
        if not b == b_conj == b_comp:
            return f"p={p}: b={b} conjugate={b_conj} complement={b_comp}"
    return None


def howe_symmetry_audit(max_degree: int) -> VerificationReport:
    """Sweep every strictly dominated pair of degree up to max_degree."""
    start = time.perf_counter()
    tested = 0
    failures = []
    for n in range(max_degree + 1):
        parts = list(enumerate_partitions(n))
        for lam in parts:
            for mu in parts:
                if not dominates_strictly(mu, lam):
                    continue
                tested += 1
                detail = howe_pair_failure(mu, lam)
                if detail is not None:
                    failures.append((mu, lam, detail))
    return VerificationReport("howe", tested, failures, time.perf_counter() - start)
