"""Independent brute-force oracles used to pin expected values.

Everything in this file deliberately avoids the package's own linear
algebra and complex-building code: dense Fraction row reduction written
from scratch, a vectorized numpy elimination mod p for the larger ranks,
and direct enumeration for group-theoretic counts.  Tests freeze the
numbers these produce and compare them against the real implementation.

Homology dimensions are recovered from ranks alone.  With W_n a chosen
subspace of C_n preserved by the boundary b (for plain Hochschild
homology W_n = 0), the quotient complex D_n = C_n / W_n satisfies

    dim H_n(D) = dim C_n - rank [b_n | W_{n-1}] + rank W_{n-1}
                          - rank [b_{n+1} | W_n]

with the first two correction terms absent at n = 0.
"""

from fractions import Fraction

import numpy as np


# ---------------------------------------------------------------------------
# dense exact row reduction (independent of hochlab.exactlin)

def dense_reduce(rows):
    rows = [[Fraction(x) for x in row] for row in rows]
    if not rows:
        return 0, rows
    ncols = len(rows[0])
    rk = 0
    for col in range(ncols):
        piv = None
        for i in range(rk, len(rows)):
            if rows[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        inv = Fraction(1) / rows[rk][col]
        rows[rk] = [inv * x for x in rows[rk]]
        for i in range(len(rows)):
            if i != rk and rows[i][col] != 0:
                c = rows[i][col]
                rows[i] = [a - c * b for a, b in zip(rows[i], rows[rk])]
        rk += 1
    return rk, rows


def dense_rank(rows):
    if not rows or not rows[0]:
        return 0
    return dense_reduce(rows)[0]


def span_dim(vectors):
    vectors = [v for v in vectors if any(x != 0 for x in v)]
    return dense_rank(vectors) if vectors else 0


def modp_rank(rows, p):
    """Rank of an integer matrix mod a prime, via vectorized elimination.

    Reduction mod p can only lower the rank, so tests that use this as a
    stand-in for the rational rank run it at two different large primes.
    """
    a = np.array(rows, dtype=np.int64) % p
    if a.size == 0:
        return 0
    nrows, _ = a.shape
    rk = 0
    for col in range(a.shape[1]):
        piv = None
        for i in range(rk, nrows):
            if a[i, col] % p:
                piv = i
                break
        if piv is None:
            continue
        a[[rk, piv]] = a[[piv, rk]]
        a[rk] = (a[rk] * pow(int(a[rk, col]), -1, p)) % p
        mask = (a[:, col] != 0)
        mask[rk] = False
        if mask.any():
            a[mask] = (a[mask] - np.outer(a[mask, col], a[rk])) % p
        rk += 1
    return rk


# ---------------------------------------------------------------------------
# group-theoretic counts from a raw multiplication table

def group_inverse_table(table):
    n = len(table)
    identity = next(e for e in range(n) if all(table[e][x] == x for x in range(n)))
    inv = [next(h for h in range(n) if table[g][h] == identity) for g in range(n)]
    return identity, inv


def conjugacy_classes(table):
    n = len(table)
    _, inv = group_inverse_table(table)
    seen = [False] * n
    classes = []
    for g in range(n):
        if seen[g]:
            continue
        orbit = {table[table[h][g]][inv[h]] for h in range(n)}
        for x in orbit:
            seen[x] = True
        classes.append(frozenset(orbit))
    return classes


def class_count(table):
    return len(conjugacy_classes(table))


def inversion_class_map(table):
    """For each conjugacy class index, the class index holding the inverses."""
    classes = conjugacy_classes(table)
    _, inv = group_inverse_table(table)
    where = {g: idx for idx, cls in enumerate(classes) for g in cls}
    return [where[inv[next(iter(cls))]] for cls in classes]


# ---------------------------------------------------------------------------
# Hochschild degree 0 from raw structure constants

def commutator_quotient_dim(mu, dim):
    """dim A / [A, A]; mu[i][j] is the dense coefficient list of e_i e_j."""
    commutators = [
        [mu[i][j][k] - mu[j][i][k] for k in range(dim)]
        for i in range(dim)
        for j in range(dim)
    ]
    return dim - span_dim(commutators)


def dihedral_degree0_dim(mu, dim, w_rows):
    """dim A / ([A,A] + im(1 - w)) with w given as dense matrix rows."""
    gens = [
        [mu[i][j][k] - mu[j][i][k] for k in range(dim)]
        for i in range(dim)
        for j in range(dim)
    ]
    for j in range(dim):
        gens.append([(1 if k == j else 0) - w_rows[k][j] for k in range(dim)])
    return dim - span_dim(gens)


# ---------------------------------------------------------------------------
# brute-force chain level: boundaries, rotations, reflections

def _tuples(dim, length):
    out = [()]
    for _ in range(length):
        out = [t + (i,) for t in out for i in range(dim)]
    return out


def _index(tup, dim):
    idx = 0
    for x in tup:
        idx = idx * dim + x
    return idx


def brute_boundary(mu, dim, n):
    """Dense matrix (list of rows) of the Hochschild boundary C_n -> C_{n-1}."""
    rows = [[Fraction(0)] * dim ** (n + 1) for _ in range(dim ** n)]
    for col, tup in enumerate(_tuples(dim, n + 1)):
        for i in range(n + 1):
            sign = (-1) ** i
            if i < n:
                prod = mu[tup[i]][tup[i + 1]]
                head, tail = tup[:i], tup[i + 2:]
                for k in range(dim):
                    if prod[k]:
                        rows[_index(head + (k,) + tail, dim)][col] += sign * prod[k]
            else:
                prod = mu[tup[n]][tup[0]]
                mid = tup[1:n]
                for k in range(dim):
                    if prod[k]:
                        rows[_index((k,) + mid, dim)][col] += sign * prod[k]
    return rows


def brute_face(mu, dim, n, i):
    """Dense matrix of the single face d_i: C_n -> C_{n-1}."""
    rows = [[Fraction(0)] * dim ** (n + 1) for _ in range(dim ** n)]
    for col, tup in enumerate(_tuples(dim, n + 1)):
        if i < n:
            prod = mu[tup[i]][tup[i + 1]]
            head, tail = tup[:i], tup[i + 2:]
        else:
            prod = mu[tup[n]][tup[0]]
            head, tail = (), tup[1:n]
        for k in range(dim):
            if prod[k]:
                rows[_index(head + (k,) + tail, dim)][col] += prod[k]
    return rows


def brute_degeneracy(unit, dim, n, j):
    """Dense matrix of s_j: C_n -> C_{n+1}, inserting the unit after leg j."""
    rows = [[Fraction(0)] * dim ** (n + 1) for _ in range(dim ** (n + 2))]
    for col, tup in enumerate(_tuples(dim, n + 1)):
        for k in range(dim):
            if unit[k]:
                rows[_index(tup[: j + 1] + (k,) + tup[j + 1 :], dim)][col] += unit[k]
    return rows


def brute_rotation(dim, n):
    """Dense matrix of the unsigned rotation a_0...a_n -> a_n a_0...a_{n-1}."""
    size = dim ** (n + 1)
    rows = [[Fraction(0)] * size for _ in range(size)]
    for col, tup in enumerate(_tuples(dim, n + 1)):
        rows[_index((tup[-1],) + tup[:-1], dim)][col] = Fraction(1)
    return rows


def brute_signed_rotation(dim, n):
    """Dense matrix of (-1)^n times the rotation a_0...a_n -> a_n a_0...a_{n-1}."""
    sign = (-1) ** n
    return [[sign * v for v in row] for row in brute_rotation(dim, n)]


def brute_reflection(w_rows, dim, n):
    """Dense matrix of the unsigned reflection a_0...a_n -> w(a_0) w(a_n)...w(a_1)."""
    size = dim ** (n + 1)
    rows = [[Fraction(0)] * size for _ in range(size)]
    for col, tup in enumerate(_tuples(dim, n + 1)):
        rearranged = (tup[0],) + tuple(reversed(tup[1:]))
        for image in _tuples(dim, n + 1):
            coeff = Fraction(1)
            for leg in range(n + 1):
                coeff *= w_rows[image[leg]][rearranged[leg]]
                if coeff == 0:
                    break
            if coeff != 0:
                rows[_index(image, dim)][col] += coeff
    return rows


def brute_signed_reflection(w_rows, dim, n):
    """Dense matrix of (-1)^(n(n+1)/2) times a_0...a_n -> w(a_0) w(a_n)...w(a_1)."""
    sign = (-1) ** (n * (n + 1) // 2)
    return [[sign * v for v in row] for row in brute_reflection(w_rows, dim, n)]


def _one_minus(mat):
    return [
        [(1 if r == c else 0) - v for c, v in enumerate(row)]
        for r, row in enumerate(mat)
    ]


def _hcat(*mats):
    mats = [m for m in mats if m and m[0]]
    if not mats:
        return []
    return [sum((list(m[r]) for m in mats), []) for r in range(len(mats[0]))]


def brute_quotient_homology_dims(mu, dim, top, relations):
    """Homology dims of (C_n / W_n, induced b) for n < top.

    relations(n) returns a list of dense matrices whose column spans add
    up to W_n; the empty list gives plain Hochschild homology.
    """
    w = {n: _hcat(*relations(n)) for n in range(top + 1)}
    ranks_w = {n: dense_rank(w[n]) for n in range(top + 1)}
    dims = []
    for n in range(top):
        b_next = brute_boundary(mu, dim, n + 1)
        r_in = dense_rank(_hcat(b_next, w[n]))
        if n == 0:
            dims.append(dim - r_in)
            continue
        b_here = brute_boundary(mu, dim, n)
        r_out = dense_rank(_hcat(b_here, w[n - 1]))
        dims.append(dim ** (n + 1) - r_out + ranks_w[n - 1] - r_in)
    return dims


def brute_hochschild_dims(mu, dim, top):
    return brute_quotient_homology_dims(mu, dim, top, lambda n: [])


def brute_cyclic_dims(mu, dim, top):
    return brute_quotient_homology_dims(
        mu, dim, top, lambda n: [_one_minus(brute_signed_rotation(dim, n))]
    )


def brute_dihedral_dims(mu, dim, top, w_rows):
    return brute_quotient_homology_dims(
        mu,
        dim,
        top,
        lambda n: [
            _one_minus(brute_signed_rotation(dim, n)),
            _one_minus(brute_signed_reflection(w_rows, dim, n)),
        ],
    )


def brute_hochschild_dims_modp(mu, dim, top, p):
    """Same as brute_hochschild_dims but with integer mu and ranks mod p."""
    dims = []
    for n in range(top):
        b_next = [[int(x) for x in row] for row in brute_boundary(mu, dim, n + 1)]
        r_in = modp_rank(b_next, p)
        if n == 0:
            dims.append(dim - r_in)
            continue
        b_here = [[int(x) for x in row] for row in brute_boundary(mu, dim, n)]
        dims.append(dim ** (n + 1) - modp_rank(b_here, p) - r_in)
    return dims
