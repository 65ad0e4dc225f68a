"""Dense two-phase primal simplex over exact rationals with Bland's rule.

Solves  max c.x  subject to  A x = b, x >= 0  with Fraction arithmetic.
Bland's rule (lowest eligible index for both entering and leaving
variable) guarantees termination on the small, highly degenerate systems
produced by the star-weighting feasibility problems.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

ZERO = Fraction(0)
ONE = Fraction(1)


class SimplexError(Exception):
    """Internal solver failure (infeasible or unbounded program)."""


def _pivot(tableau: list[list[Fraction]], basis: list[int], row: int, col: int) -> None:
    piv = tableau[row][col]
    if piv != ONE:
        inv = ONE / piv
        tableau[row] = [x * inv for x in tableau[row]]
    pivot_row = tableau[row]
    for r, tr in enumerate(tableau):
        if r == row:
            continue
        factor = tr[col]
        if factor == ZERO:
            continue
        tableau[r] = [x - factor * y for x, y in zip(tr, pivot_row)]
    basis[row] = col


def _iterate(
    tableau: list[list[Fraction]],
    basis: list[int],
    obj: list[Fraction],
    allowed: Sequence[bool],
) -> list[Fraction]:
    """Run simplex iterations on (tableau, basis) for the objective row.

    ``obj`` is the reduced-cost row including the rhs entry in the last
    position; ``allowed[j]`` gates which columns may enter the basis.
    Returns the final objective row.
    """
    ncols = len(obj) - 1
    while True:
        enter = -1
        for j in range(ncols):
            if allowed[j] and obj[j] > ZERO:
                enter = j
                break
        if enter < 0:
            return obj
        leave = -1
        best: Fraction | None = None
        for r, tr in enumerate(tableau):
            a = tr[enter]
            if a > ZERO:
                ratio = tr[-1] / a
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    best = ratio
                    leave = r
        if leave < 0:
            raise SimplexError("unbounded objective")
        _pivot(tableau, basis, leave, enter)
        factor = obj[enter]
        pivot_row = tableau[leave]
        obj = [x - factor * y for x, y in zip(obj, pivot_row)]


def solve(
    c: Sequence[Fraction | int],
    rows: Sequence[Sequence[Fraction | int]],
    rhs: Sequence[Fraction | int],
) -> tuple[Fraction, list[Fraction]]:
    """Maximize c.x subject to rows.x = rhs, x >= 0.

    Returns (optimal value, optimal x).  Raises SimplexError when the
    program is infeasible or unbounded; callers construct programs for
    which both are impossible.
    """
    nvars = len(c)
    nrows = len(rows)
    # Standard form with one artificial variable per row; rhs made nonnegative.
    tableau: list[list[Fraction]] = []
    for i in range(nrows):
        row = [Fraction(x) for x in rows[i]]
        b = Fraction(rhs[i])
        if len(row) != nvars:
            raise ValueError("row length mismatch")
        if b < ZERO:
            row = [-x for x in row]
            b = -b
        art = [ZERO] * nrows
        art[i] = ONE
        tableau.append(row + art + [b])
    basis = [nvars + i for i in range(nrows)]
    ncols = nvars + nrows

    # Phase 1: maximize -(sum of artificials).
    obj1 = [ZERO] * (ncols + 1)
    for i in range(nrows):
        obj1[nvars + i] = -ONE
    for i in range(nrows):  # price out the initial basis
        obj1 = [x + y for x, y in zip(obj1, tableau[i])]
    allowed = [True] * ncols
    obj1 = _iterate(tableau, basis, obj1, allowed)
    if obj1[-1] != ZERO:
        raise SimplexError("infeasible program")
    # Drive leftover artificials out of the (degenerate) basis.
    for r in range(nrows - 1, -1, -1):
        if basis[r] >= nvars:
            col = next((j for j in range(nvars) if tableau[r][j] != ZERO), None)
            if col is None:
                del tableau[r]
                del basis[r]
            else:
                _pivot(tableau, basis, r, col)

    # Phase 2: original objective, artificial columns barred.
    obj2 = [Fraction(x) for x in c] + [ZERO] * nrows + [ZERO]
    for r, bi in enumerate(basis):
        factor = obj2[bi]
        if factor != ZERO:
            obj2 = [x - factor * y for x, y in zip(obj2, tableau[r])]
    allowed = [j < nvars for j in range(ncols)]
    obj2 = _iterate(tableau, basis, obj2, allowed)

    x = [ZERO] * nvars
    for r, bi in enumerate(basis):
        if bi < nvars:
            x[bi] = tableau[r][-1]
    return -obj2[-1], x
