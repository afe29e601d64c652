"""Fraction-free linear algebra over the scalar field.

Systems arising from joint eigenproblems are solved by clearing row
denominators to ZZ[q,t,a] and running Bareiss elimination (every division
is exact in the polynomial ring), with back-substitution done over the
fraction field.  Matrices here are small (degree-shell size), so clarity
beats asymptotics.
"""

from .scalars import FIELD, ONE, RING, ZERO, Scalar, scalar


def _clear_row(row):
    """Scale a row of field elements to polynomials (times a common factor)."""
    lcm = RING.one
    for entry in row:
        if entry:
            lcm = lcm.lcm(entry.denom)
    return [entry.numer * lcm.quo(entry.denom) if entry else RING.zero
            for entry in row]


def nullspace(rows, ncols):
    """Basis of the right nullspace of the matrix given as field-element rows."""
    mat = [_clear_row([scalar(x) for x in row]) for row in rows]
    nrows = len(mat)
    pivots = []  # (row, col)
    prev = RING.one
    r = 0
    for c in range(ncols):
        # simplest nonzero pivot keeps the Bareiss intermediates small
        candidates = [i for i in range(r, nrows) if mat[i][c]]
        if not candidates:
            continue
        p = min(candidates, key=lambda i: len(mat[i][c].terms()))
        mat[r], mat[p] = mat[p], mat[r]
        piv = mat[r][c]
        for i in range(r + 1, nrows):
            head = mat[i][c]
            new = []
            for j in range(ncols):
                val = piv * mat[i][j] - head * mat[r][j]
                if prev != RING.one:
                    val = val.exquo(prev)
                new.append(val)
            mat[i] = new
        pivots.append((r, c))
        prev = piv
        r += 1
        if r == nrows:
            break

    pivot_cols = [c for _, c in pivots]
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        vec = [ZERO] * ncols
        vec[fc] = ONE
        for (pr, pc) in reversed(pivots):
            acc = ZERO
            for j in range(pc + 1, ncols):
                if mat[pr][j] and vec[j]:
                    acc = acc + FIELD.new(mat[pr][j], RING.one) * vec[j]
            vec[pc] = -acc / FIELD.new(mat[pr][pc], RING.one)
        basis.append(vec)
    return basis


def solve_unique(rows, rhs):
    """Solve a square nonsingular system over the field by elimination."""
    n = len(rows)
    mat = [[scalar(x) for x in row] + [scalar(b)] for row, b in zip(rows, rhs)]
    for c in range(n):
        p = next(i for i in range(c, n) if mat[i][c])
        mat[c], mat[p] = mat[p], mat[c]
        piv = mat[c][c]
        for i in range(n):
            if i == c or not mat[i][c]:
                continue
            factor = mat[i][c] / piv
            mat[i] = [mat[i][j] - factor * mat[c][j] for j in range(n + 1)]
    return [mat[i][n] / mat[i][i] for i in range(n)]
