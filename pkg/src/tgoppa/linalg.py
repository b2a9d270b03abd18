"""Exact Gaussian elimination over GF(p).

GF(2) rows travel as plain ints used as bit vectors (bit j = column j),
so row reduction is word-level XOR.  Odd primes use lists of residues.
Both paths must agree wherever they overlap; the test suite checks this.
"""

from __future__ import annotations


def pack_gf2_row(row) -> int:
    return sum(bit << j for j, bit in enumerate(row))


def rank_gf2(rows) -> int:
    """Rank of a GF(2) matrix given as bitmask rows."""
    pivots: dict[int, int] = {}
    for row in rows:
        while row:
            col = (row & -row).bit_length() - 1
            other = pivots.get(col)
            if other is None:
                pivots[col] = row
                break
            row ^= other
    return len(pivots)


def rref_modp(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form mod p; returns (matrix, pivot columns)."""
    mat = [[x % p for x in row] for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if mat[i][c]), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = pow(mat[r][c], p - 2, p)
        mat[r] = [x * inv % p for x in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [(x - f * y) % p for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return mat, pivots


def rank_modp(rows: list[list[int]], p: int) -> int:
    return len(rref_modp(rows, p)[1])


def nullspace_modp(rows: list[list[int]], p: int, ncols: int) -> list[tuple[int, ...]]:
    """Basis of {x : M x = 0} over GF(p), one vector per free column.

    Deterministic: free columns are visited in ascending order and each
    basis vector has a 1 in its own free column.
    """
    mat, pivots = rref_modp(rows, p) if rows else ([], [])
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [0] * ncols
        v[free] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-mat[i][free]) % p
        basis.append(tuple(v))
    return basis
