"""Brute-force reference computations, deliberately independent of wlpkit internals.

Only plain Python, itertools, fractions and sympy are used here.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product

import sympy


def independent_sets(n, edges):
    """All independent sets of a graph as sorted tuples, by subset enumeration."""
    es = [frozenset(e) for e in edges]
    out = []
    for k in range(n + 1):
        for S in combinations(range(n), k):
            s = set(S)
            if all(not e <= s for e in es):
                out.append(S)
    return out


def f_vector(n, edges):
    counts = {}
    for S in independent_sets(n, edges):
        counts[len(S)] = counts.get(len(S), 0) + 1
    return tuple(counts[k] for k in sorted(counts) if k > 0)


def maximal_independent_sets(n, edges):
    sets = [set(S) for S in independent_sets(n, edges)]
    return sorted(tuple(sorted(S)) for S in sets if not any(S < T for T in sets))


def whiskered_edges(n, edges):
    return list(edges) + [(i, n + i) for i in range(n)]


def rank_q(M):
    A = [[Fraction(int(x)) for x in row] for row in M]
    if not A:
        return 0
    m, n = len(A), len(A[0])
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        for i in range(m):
            if i != r and A[i][c] != 0:
                f = A[i][c] / A[r][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        r += 1
    return r


def rank_mod_p_bruteforce(M, p):
    """Rank mod p as cols - log_p(#kernel vectors); only for tiny column counts."""
    cols = len(M[0])
    kernel = 0
    for x in product(range(p), repeat=cols):
        if all(sum(a * b for a, b in zip(row, x)) % p == 0 for row in M):
            kernel += 1
    k = 0
    while p ** k < kernel:
        k += 1
    assert p ** k == kernel
    return cols - k


def ell_power_matrix_symbolic(n, faces_by_size, i, r):
    """Matrix of ell^r : A_i -> A_{i+r} via sympy polynomial expansion modulo x_j^2 and non-faces."""
    xs = sympy.symbols(f"v0:{n}")
    ell = sum(xs)
    face_set = {frozenset(F) for size in faces_by_size for F in faces_by_size[size]}
    src = faces_by_size[i]
    tgt = faces_by_size[i + r]
    M = [[0] * len(src) for _ in tgt]
    tindex = {frozenset(F): k for k, F in enumerate(tgt)}
    for c, F in enumerate(src):
        mono = sympy.Mul(*[xs[v] for v in F])
        poly = sympy.Poly(sympy.expand(ell ** r * mono), *xs)
        for exps, coeff in poly.terms():
            if max(exps) > 1:
                continue
            support = frozenset(j for j, e in enumerate(exps) if e)
            if support in face_set:
                M[tindex[support]][c] += int(coeff)
    return M


def socle_dims_linear(n, faces_by_size, top):
    """Socle by linear algebra: kernel of the stacked maps x x_j, computed with sympy."""
    face_set = {frozenset(F) for size in faces_by_size for F in faces_by_size[size]}
    dims = []
    for i in range(top + 1):
        src = faces_by_size[i]
        if i == top:
            dims.append(len(src))
            continue
        tgt = faces_by_size[i + 1]
        tindex = {frozenset(F): k for k, F in enumerate(tgt)}
        rows = []
        for j in range(n):
            block = [[0] * len(src) for _ in tgt]
            for c, F in enumerate(src):
                G = frozenset(F) | {j}
                if j not in F and G in face_set:
                    block[tindex[G]][c] = 1
            rows.extend(block)
        dims.append(len(src) - sympy.Matrix(rows).rank())
    return dims


def faces_by_size(n, edges):
    out = {}
    for S in independent_sets(n, edges):
        out.setdefault(len(S), []).append(S)
    return out
