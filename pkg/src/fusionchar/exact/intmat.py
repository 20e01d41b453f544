"""Integer matrices: Hermite and Smith normal forms, determinants, kernels.

Matrices are numpy object arrays of Python ints, so entries never overflow.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np


def int_matrix(rows, shape: tuple[int, int] | None = None) -> np.ndarray:
    """Object array of Python ints; ``shape`` is needed for empty inputs."""
    if isinstance(rows, np.ndarray) and rows.dtype == object and rows.ndim == 2:
        return rows.copy()
    rows = [list(r) for r in rows]
    if not rows:
        return np.empty(shape if shape else (0, 0), dtype=object)
    out = np.empty((len(rows), len(rows[0])), dtype=object)
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            out[i, j] = int(x)
    return out


def identity(n: int) -> np.ndarray:
    return int_matrix([[int(i == j) for j in range(n)] for i in range(n)], (n, n))


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """``(g, x, y)`` with ``x*a + y*b = g = gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def hnf(M) -> tuple[np.ndarray, np.ndarray]:
    """Row Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``U @ M == H``. ``H`` is in
    row-echelon form with positive pivots, entries above each pivot reduced
    into ``[0, pivot)``, and zero rows at the bottom.
    """
    M = int_matrix(M)
    m, n = M.shape
    A = [list(r) for r in M]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    r = 0
    for col in range(n):
        if r == m:
            break
        for i in range(r + 1, m):
            b = A[i][col]
            if b == 0:
                continue
            a = A[r][col]
            g, x, y = ext_gcd(a, b)
            ag, bg = a // g, b // g
            A[r], A[i] = ([x * s + y * t for s, t in zip(A[r], A[i])],
                          [-bg * s + ag * t for s, t in zip(A[r], A[i])])
            U[r], U[i] = ([x * s + y * t for s, t in zip(U[r], U[i])],
                          [-bg * s + ag * t for s, t in zip(U[r], U[i])])
        piv = A[r][col]
        if piv == 0:
            continue
        if piv < 0:
            A[r] = [-v for v in A[r]]
            U[r] = [-v for v in U[r]]
            piv = -piv
        for i in range(r):
            q = A[i][col] // piv
            if q:
                A[i] = [s - q * t for s, t in zip(A[i], A[r])]
                U[i] = [s - q * t for s, t in zip(U[i], U[r])]
        r += 1
    return int_matrix(A, (m, n)), int_matrix(U, (m, m))


def hnf_basis(M) -> np.ndarray:
    """Nonzero rows of the HNF: the canonical basis of the row lattice."""
    H, _ = hnf(M)
    keep = [row for row in H if any(row)]
    return int_matrix(keep, (0, H.shape[1]))


def snf(M) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Smith normal form ``(S, U, V)`` with ``U @ M @ V == S``.

    ``S`` is diagonal with nonnegative entries ``d_1 | d_2 | ...``.
    """
    M = int_matrix(M)
    m, n = M.shape
    A = [list(r) for r in M]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst -= q * row_src
        A[dst] = [s - q * t for s, t in zip(A[dst], A[src])]
        U[dst] = [s - q * t for s, t in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col_dst -= q * col_src
        for row in A:
            row[dst] -= q * row[src]
        for row in V:
            row[dst] -= q * row[src]

    for t in range(min(m, n)):
        while True:
            nz = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
            if not nz:
                break
            _, i, j = min(nz)
            swap_rows(t, i)
            swap_cols(t, j)
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                q = A[i][t] // p
                if q:
                    add_row(i, t, q)
                if A[i][t]:
                    clean = False
            for j in range(t + 1, n):
                q = A[t][j] // p
                if q:
                    add_col(j, t, q)
                if A[t][j]:
                    clean = False
            if not clean:
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], -1)
        if A[t][t] < 0:
            A[t] = [-v for v in A[t]]
            U[t] = [-v for v in U[t]]
    return int_matrix(A, (m, n)), int_matrix(U, (m, m)), int_matrix(V, (n, n))


def elementary_divisors(M) -> list[int]:
    S, _, _ = snf(M)
    return [S[i, i] for i in range(min(S.shape)) if S[i, i]]


def int_det(M) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    A = [list(map(int, r)) for r in np.asarray(M, dtype=object)]
    n = len(A)
    if n == 0:
        return 1
    if any(len(r) != n for r in A):
        raise ValueError("matrix must be square")
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if A[r][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def rank(M) -> int:
    H, _ = hnf(M)
    return sum(1 for row in H if any(row))


def left_kernel(M) -> np.ndarray:
    """Basis (rows) of the integer lattice ``{v : v @ M == 0}``."""
    M = int_matrix(M)
    H, U = hnf(M)
    rows = [U[i] for i in range(H.shape[0]) if not any(H[i])]
    return int_matrix(rows, (0, M.shape[0]))


def right_kernel(M, ncols: int | None = None) -> np.ndarray:
    """Basis (rows) of ``{v : M @ v == 0}``; pass ``ncols`` when ``M`` has no rows."""
    M = int_matrix(M, (0, ncols or 0))
    if M.shape[0] == 0:
        return identity(ncols if ncols is not None else M.shape[1])
    return left_kernel(M.T)


def solve_left(rows, target: Sequence) -> list[Fraction] | None:
    """Rational ``c`` with ``c @ rows == target`` for independent ``rows``.

    Returns ``None`` when ``target`` is outside the rational row space.
    """
    rows = int_matrix(rows)
    H, U = hnf(rows)
    k = sum(1 for row in H if any(row))
    if k != rows.shape[0]:
        raise ValueError("rows are not linearly independent")
    resid = [Fraction(int(x)) for x in target]
    coeff = []
    for i in range(k):
        p = next(j for j, x in enumerate(H[i]) if x)
        c = resid[p] / H[i, p]
        coeff.append(c)
        if c:
            resid = [r - c * h for r, h in zip(resid, H[i])]
    if any(resid):
        return None
    # c' H = target and H = U rows, so c = c' U
    return [sum((coeff[i] * U[i, j] for i in range(k)), Fraction(0)) for j in range(k)]


def lattice_index(sub_rows, basis_rows) -> int | None:
    """Index of the lattice spanned by ``sub_rows`` inside that of ``basis_rows``.

    ``None`` means the sublattice has lower rank (infinite index).
    """
    basis_rows = int_matrix(basis_rows)
    n = basis_rows.shape[0]
    coords = []
    for v in int_matrix(sub_rows):
        c = solve_left(basis_rows, v)
        if c is None or any(x.denominator != 1 for x in c):
            raise ValueError("sub_rows do not lie in the lattice")
        coords.append([int(x) for x in c])
    if not coords:
        return None if n else 1
    divisors = elementary_divisors(int_matrix(coords, (0, n)))
    if len(divisors) < n:
        return None
    out = 1
    for d in divisors:
        out *= d
    return out


def random_unimodular(n: int, rng, steps: int = 12, bound: int = 3) -> np.ndarray:
    """Product of random elementary integer row operations (det = +-1)."""
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        kind = rng.integers(3) if n > 1 else 2
        if kind == 0:
            i, j = rng.choice(n, size=2, replace=False)
            q = int(rng.integers(-bound, bound + 1))
            U[i] = [a + q * b for a, b in zip(U[i], U[j])]
        elif kind == 1:
            i, j = rng.choice(n, size=2, replace=False)
            U[i], U[j] = U[j], U[i]
        else:
            i = int(rng.integers(n))
            U[i] = [-a for a in U[i]]
    return int_matrix(U, (n, n))
