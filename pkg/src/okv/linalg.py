"""Dense exact linear algebra over a field (lists of field elements)."""

from __future__ import annotations


def rref(rows: list[list], ncols: int) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot column indices).

    Rows are copied; pivots are scaled to one and cleared from all other rows.
    """
    rows = [list(r) for r in rows]
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(rank, len(rows)):
            if rows[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        inv = rows[rank][col]
        rows[rank] = [v / inv for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return rows[:rank], pivots


def rank(rows: list[list], ncols: int) -> int:
    return len(rref(rows, ncols)[0])


def nullspace(rows: list[list], ncols: int, one, max_cells: int | None = None) -> list[list]:
    """Canonical basis of {x : A x = 0}, rows of the RREF of the kernel.

    `max_cells` bounds the materialized kernel basis (dimension times width);
    exceeding it raises ResourceCapError before the expensive step.
    """
    reduced, pivots = rref(rows, ncols)
    zero = one - one
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    if max_cells is not None and len(free_cols) * ncols > max_cells:
        from .errors import ResourceCapError

        raise ResourceCapError(
            f"kernel basis too large: {len(free_cols)}x{ncols} > {max_cells}"
        )
    basis = []
    for fc in free_cols:
        vec = [zero] * ncols
        vec[fc] = one
        for r, pc in zip(reduced, pivots):
            if r[fc]:
                vec[pc] = -r[fc]
        basis.append(vec)
    canonical, _ = rref(basis, ncols)
    return canonical


def solve_unique(matrix: list[list], rhs: list):
    """Solve A x = b when the solution exists and is unique, else None."""
    n = len(matrix)
    if n == 0:
        return [] if not rhs else None
    ncols = len(matrix[0])
    augmented = [list(row) + [b] for row, b in zip(matrix, rhs)]
    reduced, pivots = rref(augmented, ncols + 1)
    if ncols in pivots:
        return None  # inconsistent
    if len(pivots) != ncols:
        return None  # underdetermined
    zero = rhs[0] - rhs[0] if rhs else 0
    x = [zero] * ncols
    for row, pc in zip(reduced, pivots):
        x[pc] = row[ncols]
    return x


def reduce_against(vector: list, basis_rows: list[list], pivots: list[int]) -> list:
    """Subtract multiples of RREF rows to clear the pivot coordinates."""
    v = list(vector)
    for row, pc in zip(basis_rows, pivots):
        if v[pc]:
            factor = v[pc]
            v = [a - factor * b for a, b in zip(v, row)]
    return v
