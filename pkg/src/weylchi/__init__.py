"""Exact torsion Euler characteristics between integral Weyl modules of GL(n).

The invariant chi(V(mu), V(lam)) is a positive rational computed two ways: a
closed border-strip formula and an independent recursive expansion. Its prime
exponents, negated, are the Weyl-module multiplicities of the Jantzen sum
formula. Everything is exact integer arithmetic.
"""

from .chi import (
    ChiInternalError,
    ChiResult,
    EngineMismatchError,
    PositiveRootDelta,
    SnakeParameters,
    chi,
    chi_closed,
    chi_nine_table,
    chi_recursive,
    single_root_chi,
    single_root_delta,
    snake_parameters,
)
from .factored import FactoredRational, factorize, is_prime
from .partitions import (
    Cell,
    Partition,
    PartitionError,
    as_partition,
    complement,
    conjugate,
    degree,
    dominates_strictly,
    enumerate_partitions,
    enumeration_bound,
    format_partition,
    hook_length,
    intersect,
    parse_partition,
    remove_first_column,
    strip_common_border,
)
from .report import VerificationReport
from .skew import (
    SkewShape,
    ascii_rows,
    cells,
    has_two_by_two,
    is_border_strip,
    is_connected,
    left_endpoint,
    right_endpoint,
    row_count,
    vertical_strip_additions,
    vertical_strip_removals,
)
from .sumformula import (
    SumFormulaRow,
    SumFormulaTable,
    b_coefficient,
    howe_symmetry_audit,
    sum_formula_table,
    table_json_dict,
    table_text,
)
from .verify import CHECK_NAMES, run_check, run_checks

__version__ = "0.1.0"
