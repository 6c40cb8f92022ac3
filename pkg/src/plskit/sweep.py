"""Equivalence sweeps: feasibility predicates versus the search oracle.

Each sweep walks a bounded family of prescriptions, asks the predicate
and the exhaustive oracle independently, and records every tuple where
the two verdicts differ.  A correct implementation yields no mismatches.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .feasibility import check_construction, check_row_params, check_sizes
from .oracle import Budget, exists_full


@dataclass(frozen=True)
class SweepResult:
    checked: int
    mismatches: tuple[tuple, ...]

    @property
    def clean(self) -> bool:
        return not self.mismatches


def _vectors(max_len: int, max_entry: int) -> Iterator[tuple[int, ...]]:
    for length in range(1, max_len + 1):
        yield from itertools.product(range(1, max_entry + 1), repeat=length)


def theorem_tuples(
    max_side: int = 3, max_entry: int = 3, max_cells: int = 9
) -> Iterator[tuple[tuple[int, ...], tuple[int, ...], int]]:
    """All (n, m, s) with equal totals at most max_cells and s in range."""
    by_sum: dict[int, list[tuple[int, ...]]] = {}
    for vec in _vectors(max_side, max_entry):
        by_sum.setdefault(sum(vec), []).append(vec)
    for total in sorted(by_sum):
        if total > max_cells:
            continue
        for n, m in itertools.product(by_sum[total], repeat=2):
            for s in range(max(max(n), max(m)), total + 1):
                yield n, m, s


def sweep_theorem(max_side: int = 3, max_entry: int = 3, max_cells: int = 9) -> SweepResult:
    budget = Budget(max_cells=max(max_cells, 12), max_symbols=max_cells)
    mismatches = []
    checked = 0
    for n, m, s in theorem_tuples(max_side, max_entry, max_cells):
        checked += 1
        predicted = check_construction(n, m, s).feasible
        actual, _ = exists_full(row_params=n, col_params=m, s=s, budget=budget)
        if predicted != actual:
            mismatches.append((n, m, s, predicted, actual))
    return SweepResult(checked, tuple(mismatches))


def row_params_tuples(
    max_side: int = 3, max_entry: int = 3, max_symbols: int = 3
) -> Iterator[tuple[tuple[int, ...], int, int]]:
    """All (n, c, s) with len(n) <= max_side, entries and c, s in range."""
    for n in _vectors(max_side, max_entry):
        for c in range(1, max_side + 1):
            for s in range(1, max_symbols + 1):
                yield n, c, s


def sweep_row_params(max_side: int = 3, max_entry: int = 3, max_symbols: int = 3) -> SweepResult:
    budget = Budget(max_cells=max(12, max_side * max_entry))
    mismatches = []
    checked = 0
    for n, c, s in row_params_tuples(max_side, max_entry, max_symbols):
        checked += 1
        predicted = check_row_params(n, c, s).feasible
        actual, _ = exists_full(row_params=n, c=c, s=s, budget=budget)
        if predicted != actual:
            mismatches.append((n, c, s, predicted, actual))
    return SweepResult(checked, tuple(mismatches))


def sizes_tuples(
    max_side: int = 3, max_cells: int = 9
) -> Iterator[tuple[int, int, int, int]]:
    """All (r, c, s, v) with sides at most max_side and v at most max_cells."""
    for r, c, s in itertools.product(range(1, max_side + 1), repeat=3):
        for v in range(1, max_cells + 1):
            yield r, c, s, v


def sweep_sizes(max_side: int = 3, max_cells: int = 9) -> SweepResult:
    budget = Budget(max_cells=max(max_cells, 12))
    mismatches = []
    checked = 0
    for r, c, s, v in sizes_tuples(max_side, max_cells):
        checked += 1
        predicted = check_sizes(r, c, s, v).feasible
        actual, _ = exists_full(r=r, c=c, s=s, v=v, budget=budget)
        if predicted != actual:
            mismatches.append((r, c, s, v, predicted, actual))
    return SweepResult(checked, tuple(mismatches))
