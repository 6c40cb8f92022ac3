"""Partial Latin squares with prescribed row, column, and symbol parameters.

The package decides whether a partial Latin square with given per-line
occupancy counts exists and, when it does, constructs one.  An
exhaustive search oracle double-checks the decision predicates on small
instances.
"""

from .builder import (
    build_corollary,
    build_proposition,
    build_theorem,
    fill_symbols,
    iter_symbol_layers,
    split_symbols,
)
from .core import (
    CellSet,
    ParameterProfile,
    PartialLatinSquare,
    Triple,
    conjugate,
    invert_axes,
    normalize,
    parameters_of,
    validate,
)
from .errors import (
    BudgetExceeded,
    ColSymbolClash,
    DocumentError,
    DuplicateCell,
    EmptyInput,
    Infeasible,
    NoSaturation,
    PlsError,
    PreconditionViolated,
    RowSymbolClash,
    SumMismatch,
    TriplePairError,
)
from .feasibility import (
    Condition,
    FeasibilityReport,
    check_construction,
    check_row_params,
    check_sizes,
    dominance_check,
)
from .formats import PlsDocument, SpecDocument, render_grid
from .matching import (
    AlternatingComponent,
    BipartiteGraph,
    Matching,
    merge_matchings,
    occupancy_graph,
    saturating_matching,
    symmetric_difference_components,
)
from .oracle import Budget, DEFAULT_BUDGET, enumerate_pls, exists_full
from .realization import distribute_rows, realize_degree_matrix, rebalance_columns
from .sweep import (
    SweepResult,
    sweep_row_params,
    sweep_sizes,
    sweep_theorem,
)

__all__ = [
    "AlternatingComponent",
    "BipartiteGraph",
    "Budget",
    "BudgetExceeded",
    "CellSet",
    "ColSymbolClash",
    "Condition",
    "DEFAULT_BUDGET",
    "DocumentError",
    "DuplicateCell",
    "EmptyInput",
    "FeasibilityReport",
    "Infeasible",
    "Matching",
    "NoSaturation",
    "ParameterProfile",
    "PartialLatinSquare",
    "PlsDocument",
    "PlsError",
    "PreconditionViolated",
    "RowSymbolClash",
    "SpecDocument",
    "SumMismatch",
    "SweepResult",
    "Triple",
    "TriplePairError",
    "build_corollary",
    "build_proposition",
    "build_theorem",
    "check_construction",
    "check_row_params",
    "check_sizes",
    "conjugate",
    "distribute_rows",
    "dominance_check",
    "enumerate_pls",
    "exists_full",
    "fill_symbols",
    "invert_axes",
    "iter_symbol_layers",
    "merge_matchings",
    "normalize",
    "occupancy_graph",
    "parameters_of",
    "realize_degree_matrix",
    "rebalance_columns",
    "render_grid",
    "saturating_matching",
    "split_symbols",
    "sweep_row_params",
    "sweep_sizes",
    "sweep_theorem",
    "symmetric_difference_components",
    "validate",
]

__version__ = "0.1.0"
