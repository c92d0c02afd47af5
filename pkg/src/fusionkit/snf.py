"""Exact integer matrix routines: Smith normal form, kernels mod m, abelian
group invariants of finitely presented abelian groups.

Matrices are lists of lists of Python ints; everything is exact.
"""

from __future__ import annotations


def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def _swap_cols(m, i, j):
    for row in m:
        row[i], row[j] = row[j], row[i]


def smith_normal_form(mat, want_transform: bool = False):
    """Return (diag, U, V) with U*A*V having the diagonal ``diag`` (d_i | d_{i+1}).

    U and V are unimodular; returned only if ``want_transform``.  ``diag`` is
    the full list of diagonal entries (nonneg, divisibility chain, zeros last),
    of length min(rows, cols).
    """
    a = [list(row) for row in mat]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    v = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def row_op(i, j, q):  # row_i -= q * row_j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for row in a:
            row[i] -= q * row[j]
        for row in v:
            row[i] -= q * row[j]

    t = 0
    while t < min(rows, cols):
        # find smallest nonzero pivot in the t.. submatrix
        piv = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = abs(a[i][j])
                if x and (best is None or x < best):
                    best, piv = x, (i, j)
        if piv is None:
            break
        i, j = piv
        _swap_rows(a, t, i)
        _swap_rows(u, t, i)
        _swap_cols(a, t, j)
        _swap_cols(v, t, j)
        dirty = False
        for i in range(t + 1, rows):
            if a[i][t]:
                q = a[i][t] // a[t][t]
                row_op(i, t, q)
                if a[i][t]:
                    dirty = True
        for j in range(t + 1, cols):
            if a[t][j]:
                q = a[t][j] // a[t][t]
                col_op(j, t, q)
                if a[t][j]:
                    dirty = True
        if dirty:
            continue
        # pivot must divide every remaining entry
        d = a[t][t]
        bad = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % d:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            # add offending row to row t and restart the step
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
            u[t] = [x + y for x, y in zip(u[t], u[bad])]
            continue
        t += 1
    # the elimination order guarantees d_1 | d_2 | ... with zeros at the end;
    # signs are dropped (U*A*V is diagonal up to sign, which kernel/invariant
    # computations never see)
    diag = [abs(a[k][k]) for k in range(min(rows, cols))]
    if want_transform:
        return diag, u, v
    return diag


def abelian_invariants(num_generators: int, relations):
    """Invariant factors (d_1 | d_2 | ...; 0 = Z summand) of Z^n / <relations>.

    ``relations`` is an iterable of integer vectors of length num_generators.
    Returns the list of invariant factors > 1 followed by 0s for free summands.
    """
    rel = [list(r) for r in relations]
    if not rel:
        return [0] * num_generators
    diag = smith_normal_form(rel)
    rank = sum(1 for d in diag if d)
    tor = [d for d in diag if d > 1]
    free = num_generators - rank
    return tor + [0] * free


def kernel_mod(mat, m: int):
    """Basis (list of vectors over Z/m) spanning {x : mat @ x == 0 mod m}.

    The returned vectors generate the kernel as a Z/m-module.
    """
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    if cols == 0:
        return []
    if rows == 0:
        return [[int(i == j) for j in range(cols)] for i in range(cols)]
    diag, _u, v = smith_normal_form(mat, want_transform=True)
    # solutions: y_i * d_i == 0 mod m  =>  y_i in (m/gcd(d_i,m)) Z/m ; x = V y
    from math import gcd

    gens = []
    for i in range(cols):
        d = diag[i] if i < len(diag) else 0
        step = m // gcd(d, m) if d else 1
        if step % m == 0 and d:
            continue  # only the zero solution in this coordinate
        vec = [(v[r][i] * step) % m for r in range(cols)]
        if any(vec):
            gens.append(vec)
    return gens


def solve_gf(rows, rhs, p: int):
    """Solve the sparse linear system over GF(p); rows are dicts {col: coeff}.

    Returns an assignment dict {col: value} for one solution (free variables 0),
    or None if inconsistent.  Intended for small/medium exact solves.
    """
    # dense-ish elimination keyed by pivot column
    pivots = {}  # col -> (rowdict, rhs)
    for row, b in zip(rows, rhs):
        row = {c: v % p for c, v in row.items() if v % p}
        b %= p
        while row:
            c = min(row)
            if c in pivots:
                prow, pb = pivots[c]
                f = (row[c] * pow(prow[c], p - 2, p)) % p
                for cc, vv in prow.items():
                    nv = (row.get(cc, 0) - f * vv) % p
                    if nv:
                        row[cc] = nv
                    else:
                        row.pop(cc, None)
                b = (b - f * pb) % p
            else:
                pivots[c] = (row, b)
                row = {}
        if not row and b:
            return None
    sol = {}
    for c in sorted(pivots, reverse=True):
        prow, pb = pivots[c]
        acc = pb
        for cc, vv in prow.items():
            if cc != c:
                acc = (acc - vv * sol.get(cc, 0)) % p
        sol[c] = (acc * pow(prow[c], p - 2, p)) % p
    return sol
