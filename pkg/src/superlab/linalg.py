"""Exact dense linear algebra over Q(E): rank, kernel, and a row-space tracker.

Matrices are lists of rows, rows are lists of QEps.  Everything is exact
Gaussian elimination; no pivoting heuristics are needed over an exact field.
"""

from __future__ import annotations

from .scalars import ONE, ZERO, QEps

__all__ = ["rank", "kernel_basis", "Echelon"]


def _eliminate(rows: list[list[QEps]], ncols: int):
    """Reduce rows in place to row echelon form; return pivot column list."""
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank(matrix: list[list[QEps]]) -> int:
    if not matrix:
        return 0
    rows = [list(row) for row in matrix]
    return len(_eliminate(rows, len(rows[0])))


def kernel_basis(matrix: list[list[QEps]]) -> list[list[QEps]]:
    """Basis of the right kernel {v : M v = 0}."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    rows = [list(row) for row in matrix]
    pivots = _eliminate(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [ZERO] * ncols
        v[fc] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(v)
    return basis


class Echelon:
    """Incremental row space: add vectors, keep a reduced echelon basis.

    Used by subalgebra closure: vectors are sparse dicts index -> QEps over a
    fixed ambient dimension.
    """

    def __init__(self):
        self.rows: dict[int, dict[int, QEps]] = {}  # leading index -> row

    def reduce(self, vec: dict[int, QEps]) -> dict[int, QEps]:
        v = dict(vec)
        while v:
            lead = min(v)
            row = self.rows.get(lead)
            if row is None:
                return v
            f = v[lead]
            for k, c in row.items():
                nv = v.get(k, ZERO) - f * c
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
        return v

    def add(self, vec: dict[int, QEps]) -> bool:
        """Insert vec; return True if it enlarged the span."""
        v = self.reduce(vec)
        if not v:
            return False
        lead = min(v)
        inv = v[lead].inverse()
        v = {k: c * inv for k, c in v.items()}
        # Back-substitute into existing rows so reduction stays one pass.
        for l2, row in self.rows.items():
            if lead in row:
                f = row[lead]
                for k, c in v.items():
                    nv = row.get(k, ZERO) - f * c
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
        self.rows[lead] = v
        return True

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, vec: dict[int, QEps]) -> bool:
        return not self.reduce(vec)
