"""Exact linear algebra over the RationalQ field (small dense systems)."""

from __future__ import annotations

from spiderweb.qalg import RationalQ


class InconsistentSystem(ValueError):
    """The linear system has no solution."""


def gauss_solve(rows: list[list[RationalQ]], rhs: list[RationalQ]):
    """Solve A x = b exactly.

    Returns the unique solution as a list.  Raises InconsistentSystem if
    no solution exists and ValueError if the solution is not unique.
    Overdetermined systems are fine; consistency is checked row by row.
    """
    m = len(rows)
    if m != len(rhs):
        raise ValueError("matrix/rhs size mismatch")
    n = len(rows[0]) if m else 0
    a = [list(r) + [b] for r, b in zip(rows, rhs)]
    piv_cols = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if not a[i][col].is_zero()), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][col].inv()
        a[r] = [x * inv for x in a[r]]
        for i in range(m):
            if i != r and not a[i][col].is_zero():
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        piv_cols.append(col)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if not a[i][n].is_zero():
            raise InconsistentSystem("inconsistent linear system")
    if len(piv_cols) < n:
        raise ValueError("underdetermined linear system")
    x = [RationalQ.zero()] * n
    for i, col in enumerate(piv_cols):
        x[col] = a[i][n]
    return x


def nullspace_1d(rows: list[list[RationalQ]], norm_index: int):
    """Solve A x = 0 for a solution space of dimension exactly 1.

    The solution is scaled so x[norm_index] = 1.  Raises ValueError if
    the nullspace dimension is not 1 or the normalized entry vanishes.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    a = [list(r) for r in rows]
    piv_cols = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if not a[i][col].is_zero()), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][col].inv()
        a[r] = [x * inv for x in a[r]]
        for i in range(m):
            if i != r and not a[i][col].is_zero():
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        piv_cols.append(col)
        r += 1
        if r == m:
            break
    free = [c for c in range(n) if c not in piv_cols]
    if len(free) != 1:
        raise ValueError(f"nullspace dimension {len(free)}, expected 1")
    fc = free[0]
    x = [RationalQ.zero()] * n
    x[fc] = RationalQ.one()
    for i, col in enumerate(piv_cols):
        x[col] = -a[i][fc]
    if x[norm_index].is_zero():
        raise ValueError("normalization entry vanishes")
    scale = x[norm_index].inv()
    return [v * scale for v in x]
