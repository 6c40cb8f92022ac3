"""Shared hypothesis strategies for the test suite."""

from hypothesis import strategies as st

from plskit import BipartiteGraph, CellSet, PartialLatinSquare, validate


@st.composite
def squares(draw, max_rows: int = 4, max_cols: int = 4, max_symbols: int = 4,
            max_cells: int = 6) -> PartialLatinSquare:
    """A random valid partial Latin square, built by greedy insertion."""
    cube = [
        (i, j, k)
        for i in range(1, max_rows + 1)
        for j in range(1, max_cols + 1)
        for k in range(1, max_symbols + 1)
    ]
    picks = draw(st.lists(st.sampled_from(cube), min_size=1, max_size=3 * max_cells))
    chosen: list[tuple[int, int, int]] = []
    occupied: set[tuple[int, int]] = set()
    row_sym: set[tuple[int, int]] = set()
    col_sym: set[tuple[int, int]] = set()
    for i, j, k in picks:
        if len(chosen) == max_cells:
            break
        if (i, j) in occupied or (i, k) in row_sym or (j, k) in col_sym:
            continue
        chosen.append((i, j, k))
        occupied.add((i, j))
        row_sym.add((i, k))
        col_sym.add((j, k))
    # The first pick never clashes with anything, so chosen is nonempty.
    return validate(chosen)


@st.composite
def cell_sets(draw, max_rows: int = 6, max_cols: int = 6) -> CellSet:
    rows = draw(st.integers(1, max_rows))
    cols = draw(st.integers(1, max_cols))
    cells = draw(
        st.sets(
            st.tuples(st.integers(1, rows), st.integers(1, cols)),
            min_size=1,
            max_size=rows * cols,
        )
    )
    return CellSet(frozenset(cells), rows=rows, cols=cols)


@st.composite
def graphs(draw, max_side: int = 6, max_degree: int = 4) -> BipartiteGraph:
    """A bipartite graph with at least one edge and max degree capped."""
    left = draw(st.integers(1, max_side))
    right = draw(st.integers(1, max_side))
    pool = [(u, v) for u in range(1, left + 1) for v in range(1, right + 1)]
    picks = draw(st.lists(st.sampled_from(pool), min_size=1, max_size=3 * max_side))
    edges: set[tuple[int, int]] = set()
    left_deg = [0] * (left + 1)
    right_deg = [0] * (right + 1)
    for u, v in picks:
        if (u, v) in edges or left_deg[u] == max_degree or right_deg[v] == max_degree:
            continue
        edges.add((u, v))
        left_deg[u] += 1
        right_deg[v] += 1
    return BipartiteGraph(left, right, frozenset(edges))
