"""Graded pieces of A(D) = K[x_1..x_n] / (x_i^2, I_D) and multiplication matrices.

Degree-i basis of A(D) is the list of (i-1)-faces of D in lexicographic order
(squarefree monomials on non-faces vanish).  Matrices use rows = target basis,
columns = source basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import factorial

import numpy as np
from scipy import sparse

from .complexes import SimplicialComplex, vertices_of


class DegreeError(ValueError):
    pass


@dataclass(frozen=True)
class GradedAlgebra:
    complex: SimplicialComplex

    @property
    def n(self) -> int:
        return self.complex.n

    @property
    def top_degree(self) -> int:
        return self.complex.dimension + 1

    @cached_property
    def hilbert(self) -> tuple[int, ...]:
        return (1,) + self.complex.f_vector()

    def basis(self, i: int) -> list[int]:
        if not 0 <= i <= self.top_degree:
            raise DegreeError(f"degree {i} outside [0, {self.top_degree}]")
        return [0] if i == 0 else self.complex.faces_of_dim(i - 1)

    def index(self, i: int) -> dict[int, int]:
        return {F: k for k, F in enumerate(self.basis(i))}

    def monomial(self, face: int) -> str:
        """Render a basis face as ``x1*y2``."""
        return self.complex.face_label(face, "*")


def build_algebra(D: SimplicialComplex) -> GradedAlgebra:
    if D.n < 1:
        raise ValueError("algebra needs at least one variable")
    return GradedAlgebra(D)


def _check_degree(A: GradedAlgebra, i: int, r: int = 1) -> None:
    if r < 1:
        raise DegreeError(f"power must be >= 1, got {r}")
    if i < 0 or i + r > A.top_degree:
        raise DegreeError(
            f"map A_{i} -> A_{i + r} outside degrees [0, {A.top_degree}]")


def mult_entries(A: GradedAlgebra, i: int) -> tuple[np.ndarray, np.ndarray]:
    """(row, col) coordinates of the ones in the matrix of x ell : A_i -> A_{i+1}."""
    _check_degree(A, i)
    target = A.index(i + 1)
    rows, cols = [], []
    full = (1 << A.n) - 1
    for c, F in enumerate(A.basis(i)):
        free = full & ~F
        while free:
            low = free & -free
            r = target.get(F | low)
            if r is not None:
                rows.append(r)
                cols.append(c)
            free ^= low
    return np.asarray(rows, dtype=np.int64), np.asarray(cols, dtype=np.int64)


def mult_matrix(A: GradedAlgebra, i: int, *, as_sparse: bool = False):
    """Matrix of multiplication by the sum of the variables, ``A_i -> A_{i+1}``.

    Entry (F', F) is 1 iff F' = F plus one vertex.  Returns a dense int64 array,
    or a CSR matrix with ``as_sparse=True``.
    """
    rows, cols = mult_entries(A, i)
    shape = (A.hilbert[i + 1], A.hilbert[i])
    if as_sparse:
        data = np.ones(len(rows), dtype=np.int64)
        return sparse.csr_matrix((data, (rows, cols)), shape=shape)
    M = np.zeros(shape, dtype=np.int64)
    M[rows, cols] = 1
    return M


def power_mult_matrix(A: GradedAlgebra, i: int, r: int, p: int = 0) -> np.ndarray:
    """Matrix of multiplication by ell^r, ``A_i -> A_{i+r}``.

    Modulo the squares, ell^r = r! * (sum of squarefree degree-r monomials),
    so entry (F', F) is r! when F is F' minus r vertices.  With ``p > 0`` the
    entries are reduced mod p and vanish once p <= r.
    """
    _check_degree(A, i, r)
    coeff = factorial(r)
    if p:
        coeff %= p
    dtype = np.int64 if coeff < 2**62 else object
    source = A.index(i)
    target = A.basis(i + r)
    M = np.zeros((len(target), len(source)), dtype=dtype)
    if coeff == 0:
        return M
    for row, G in enumerate(target):
        verts = vertices_of(G)
        for removed in combinations(verts, r):
            sub = G
            for v in removed:
                sub ^= 1 << v
            M[row, source[sub]] = coeff
    return M


@dataclass
class SocleReport:
    dims: tuple[int, ...]
    top_degree: int

    @property
    def is_level(self) -> bool:
        return all(d == 0 for d in self.dims[: self.top_degree])

    @property
    def socle_degree(self) -> int:
        """Highest degree carrying socle (the socle degree when level)."""
        return max(i for i, d in enumerate(self.dims) if d)

    def to_dict(self) -> dict:
        return {"dims": list(self.dims), "is_level": self.is_level,
                "socle_degree": self.socle_degree}


def socle(A: GradedAlgebra, p: int = 0) -> SocleReport:
    """Socle dimensions by degree.

    The socle of a monomial quotient is spanned by monomials, and x_F is
    killed by every variable iff F is a facet, so this is independent of the
    characteristic ``p``.
    """
    dims = [0] * (A.top_degree + 1)
    for F in A.complex.facets:
        dims[F.bit_count()] += 1
    return SocleReport(tuple(dims), A.top_degree)


def variable_mult_stack(A: GradedAlgebra, i: int) -> np.ndarray:
    """Stacked matrices of x x_j : A_i -> A_{i+1}, j = 1..n (shape n*dim A_{i+1} by dim A_i).

    Its kernel is the degree-i socle; used as a linear-algebra cross-check.
    """
    src = A.basis(i)
    if i >= A.top_degree:
        return np.zeros((0, len(src)), dtype=np.int64)
    target = A.index(i + 1)
    m = len(target)
    S = np.zeros((A.n * m, len(src)), dtype=np.int64)
    for c, F in enumerate(src):
        for j in range(A.n):
            if F >> j & 1:
                continue
            r = target.get(F | 1 << j)
            if r is not None:
                S[j * m + r, c] = 1
    return S
