"""Independent reference implementations used as test oracles.

Deliberately naive and structurally different from the library paths:
dense numpy matrices, fraction-free integer elimination, and exhaustive
enumeration.
"""

from __future__ import annotations

import numpy as np


def dense_from_rows(rows, ncols):
    out = np.zeros((len(rows), ncols), dtype=np.int64)
    for i, r in enumerate(rows):
        for j in range(ncols):
            out[i, j] = (r >> j) & 1
    return out


def bareiss_rank(mat: np.ndarray) -> int:
    """Fraction-free elimination over the integers; rank of mat mod 2."""
    a = [[int(x) & 1 for x in row] for row in mat]
    nr = len(a)
    nc = len(a[0]) if nr else 0
    rank = 0
    row = 0
    prev = 1
    for col in range(nc):
        piv = None
        for r in range(row, nr):
            if a[r][col] % 2:
                piv = r
                break
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        for r in range(nr):
            if r != row and a[r][col] % 2:
                a[r] = [
                    (a[r][c] * a[row][col] - a[r][col] * a[row][c]) % 2
                    for c in range(nc)
                ]
        rank += 1
        row += 1
        if row == nr:
            break
    return rank


def gf2_rank_dense(mat: np.ndarray) -> int:
    a = (np.array(mat, dtype=np.uint8) % 2).copy()
    nr, nc = a.shape
    rank = 0
    row = 0
    for col in range(nc):
        piv = None
        for r in range(row, nr):
            if a[r, col]:
                piv = r
                break
        if piv is None:
            continue
        a[[row, piv]] = a[[piv, row]]
        for r in range(nr):
            if r != row and a[r, col]:
                a[r] ^= a[row]
        rank += 1
        row += 1
        if row == nr:
            break
    return rank


def brute_force_solutions(rows, ncols, rhs) -> set[int]:
    """All x with A x = rhs, by enumerating 2^ncols vectors."""
    sols = set()
    for x in range(1 << ncols):
        ok = True
        for i, row in enumerate(rows):
            if ((row & x).bit_count() & 1) != ((rhs >> i) & 1):
                ok = False
                break
        if ok:
            sols.add(x)
    return sols


def structure_tensor(g) -> np.ndarray:
    n = g.dim
    c = np.zeros((n, n, n), dtype=np.uint8)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                c[i, j, k] = (g.bracket_table[i][j] >> k) & 1
    return c


def dense_bracket(c, x, y):
    """Bilinear contraction of coordinate vectors against the tensor."""
    return np.einsum("i,j,ijk->k", x, y, c) % 2


def jacobi_defect(g, i, j, k) -> np.ndarray:
    """Direct dense recomputation of the cyclic Jacobi sum at basis triples."""
    c = structure_tensor(g)
    n = g.dim
    e = np.eye(n, dtype=np.uint8)
    total = np.zeros(n, dtype=np.int64)
    for (a, b, d) in ((i, j, k), (j, k, i), (k, i, j)):
        inner = dense_bracket(c, e[b], e[d])
        total += dense_bracket(c, e[a], inner)
    return total % 2


def dense_square(g, x):
    """Squaring of an odd coordinate vector via basis values + polarization."""
    n = g.dim
    out = np.zeros(n, dtype=np.int64)
    idx = [i for i in range(n) if (x >> i) & 1]
    for a, i in enumerate(idx):
        for k in range(n):
            out[k] += (g.squaring[i] >> k) & 1
        for j in idx[a + 1 :]:
            for k in range(n):
                out[k] += (g.bracket_table[i][j] >> k) & 1
    return out % 2


def vec(x, n):
    return np.array([(x >> j) & 1 for j in range(n)], dtype=np.uint8)


def unvec(arr):
    out = 0
    for j, v in enumerate(arr):
        if int(v) & 1:
            out |= 1 << j
    return out


def squaring_jacobi_defect(g, i, j):
    """Dense recomputation of [s(e_i), e_j] + [e_i, [e_i, e_j]]."""
    c = structure_tensor(g)
    n = g.dim
    e = np.eye(n, dtype=np.uint8)
    s_i = vec(g.squaring[i], n)
    lhs = dense_bracket(c, s_i, e[j])
    inner = dense_bracket(c, e[i], e[j])
    rhs = dense_bracket(c, e[i], inner)
    return (lhs + rhs) % 2


def gram_dense(form, n):
    return dense_from_rows(form.gram.rows, n)


def invariance_defect(g, form, i, j, k):
    """B([e_i,e_j], e_k) + B(e_i, [e_j,e_k]) recomputed densely."""
    c = structure_tensor(g)
    n = g.dim
    e = np.eye(n, dtype=np.uint8)
    gr = gram_dense(form, n)
    lhs = int(dense_bracket(c, e[i], e[j]) @ gr @ e[k]) % 2
    rhs = int(e[i] @ gr @ dense_bracket(c, e[j], e[k])) % 2
    return lhs ^ rhs


def fully_valid(g, form) -> bool:
    """Complete independent validity check of (g, B), dense arithmetic."""
    n = g.dim
    c = structure_tensor(g)
    par = np.array(g.parity, dtype=np.uint8)
    # symmetry, alternating, grading
    for i in range(n):
        if g.bracket_table[i][i]:
            return False
        if g.parity[i] == 0 and g.squaring[i]:
            return False
        for k in range(n):
            if (g.squaring[i] >> k) & 1 and par[k] == 1:
                return False
        for j in range(n):
            if g.bracket_table[i][j] != g.bracket_table[j][i]:
                return False
            for k in range(n):
                if c[i, j, k] and par[k] != (par[i] + par[j]) % 2:
                    return False
    # Jacobi on distinct triples
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if jacobi_defect(g, i, j, k).any():
                    return False
    # squaring axiom at basis instances
    for i in range(n):
        if g.parity[i] == 1:
            for j in range(n):
                if squaring_jacobi_defect(g, i, j).any():
                    return False
    if form is None:
        return True
    gr = gram_dense(form, n)
    if (gr != gr.T).any():
        return False
    for i in range(n):
        if par[i] == 1 and gr[i, i]:
            return False
        for j in range(n):
            if gr[i, j] and (par[i] + par[j]) % 2 != form.parity:
                return False
    if gf2_rank_dense(gr) != n:
        return False
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if invariance_defect(g, form, i, j, k):
                    return False
    return True
