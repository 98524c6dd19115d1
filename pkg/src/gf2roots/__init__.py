"""Roots of the identity and zero matrices among upper-triangular GF(2)
matrices: enumeration, exact rank-stratified counts, closed forms, and
Cholesky factorization of symmetric matrices.
"""

from .census import (
    CheckResult,
    ClosedFormTerm,
    CountTable,
    CrossVerifyReport,
    SummandRangeResult,
    closed_form_term,
    cross_verify,
    identity_root_table,
    recurrence_table,
    split_closed_form,
    summand_range_check,
    unified_closed_form,
)
from .cholesky import (
    CholeskyResult,
    RootEnumeration,
    RootMethod,
    all_roots,
    canonical_root,
    has_root,
    root_count,
    unique_root_full_rank,
)
from .gf2 import (
    Gf2Matrix,
    Gf2Vector,
    StructuralFlags,
    SubspaceBasis,
    enumerate_subspace,
    leading_principal_minors,
    null_space,
    solve_upper_triangular,
    structural_predicates,
)
from .rootsets import (
    DEFAULT_ORACLE_BUDGET,
    MAX_STRUCTURED_N,
    BijectionPair,
    OracleBudgetError,
    RootCensusEntry,
    RootFamily,
    brute_force_enumerate,
    canonical_bijection,
    enumerate_bijection,
    shift_by_identity,
    structured_enumerate,
)
from .verify import SUITE_NAMES, SuiteResult, VerifyReport, run_suites

__version__ = "0.1.0"

__all__ = [
    "BijectionPair",
    "CheckResult",
    "CholeskyResult",
    "ClosedFormTerm",
    "CountTable",
    "CrossVerifyReport",
    "DEFAULT_ORACLE_BUDGET",
    "Gf2Matrix",
    "Gf2Vector",
    "MAX_STRUCTURED_N",
    "OracleBudgetError",
    "RootCensusEntry",
    "RootEnumeration",
    "RootFamily",
    "RootMethod",
    "StructuralFlags",
    "SubspaceBasis",
    "SuiteResult",
    "SummandRangeResult",
    "SUITE_NAMES",
    "VerifyReport",
    "all_roots",
    "brute_force_enumerate",
    "canonical_bijection",
    "canonical_root",
    "closed_form_term",
    "cross_verify",
    "enumerate_bijection",
    "enumerate_subspace",
    "has_root",
    "identity_root_table",
    "leading_principal_minors",
    "null_space",
    "recurrence_table",
    "root_count",
    "run_suites",
    "shift_by_identity",
    "solve_upper_triangular",
    "split_closed_form",
    "structural_predicates",
    "structured_enumerate",
    "summand_range_check",
    "unified_closed_form",
    "unique_root_full_rank",
]
