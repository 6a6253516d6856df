"""Exact rank and linear solving over Q and F_p for small-integer matrices.

Three engines:

* dense Gaussian elimination mod p on int64 numpy arrays (p < 2**31 so that
  products of reduced entries fit in 63 bits);
* Bareiss fraction-free elimination with Python integers (exact over Q);
* sparse row elimination mod p with Python integers, used for solving.

Rational answers from the modular solver are lifted by rational
reconstruction and then verified with exact integer arithmetic, so
``in_column_span`` over Q never relies on a lucky prime.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy import sparse
from sympy import isprime, nextprime
from sympy.ntheory.modular import crt

DENSE_PRIME_LIMIT = 2**31
BAREISS_THRESHOLD = 256
SOLVE_PRIME = 2**61 - 1


class PrimeError(ValueError):
    pass


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not isprime(self.p):
            raise PrimeError(f"{self.p} is not prime")

    def inv(self, a: int) -> int:
        return pow(a % self.p, -1, self.p)


def _check_prime(p: int) -> int:
    return PrimeField(int(p)).p


def _as_dense(M) -> np.ndarray:
    if sparse.issparse(M):
        return M.toarray()
    return np.asarray(M)


# ---------------------------------------------------------------- rank mod p

def rank_mod_p(M, p: int) -> int:
    """Rank of the integer matrix ``M`` reduced mod the prime ``p``."""
    p = _check_prime(p)
    A = _as_dense(M)
    if A.size == 0:
        return 0
    if p < DENSE_PRIME_LIMIT and A.dtype != object:
        return _rank_dense_int64(A, p)
    return len(_echelon_pivots(_row_dicts(A, p), p))


def _rank_dense_int64(M: np.ndarray, p: int) -> int:
    A = np.mod(M.astype(np.int64, copy=False), p)
    if A.shape[0] < A.shape[1]:
        A = A.T
    A = np.ascontiguousarray(A)
    m, n = A.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r, c:] = A[r, c:] * inv % p
        below = r + 1 + np.flatnonzero(A[r + 1:, c])
        if below.size:
            sub = A[below, c:]
            sub -= np.outer(A[below, c], A[r, c:])
            np.mod(sub, p, out=sub)
            A[below, c:] = sub
        r += 1
    return r


def _row_dicts(A, p: int | None = None) -> list[dict[int, int]]:
    if sparse.issparse(A):
        A = A.tocsr()
        rows = []
        for i in range(A.shape[0]):
            lo, hi = A.indptr[i], A.indptr[i + 1]
            rows.append({int(c): int(v) for c, v in zip(A.indices[lo:hi], A.data[lo:hi])})
    else:
        rows = [{int(c): int(A[i, c]) for c in np.flatnonzero(A[i])} for i in range(A.shape[0])]
    if p is not None:
        rows = [{c: v % p for c, v in row.items() if v % p} for row in rows]
    return rows


# ---------------------------------------------------------------- Bareiss

def rank_bareiss(M) -> int:
    """Exact rank over Q by fraction-free (Bareiss) elimination."""
    A = _as_dense(M)
    rows = [[int(x) for x in row] for row in A if any(row)]
    if not rows:
        return 0
    ncols = len(rows[0])
    prev = 1
    rank = 0
    for c in range(ncols):
        # rows hold columns c..ncols-1 only
        piv_idx = next((i for i, row in enumerate(rows) if row[0]), None)
        if piv_idx is None:
            rows = [row[1:] for row in rows]
            continue
        pivot_row = rows.pop(piv_idx)
        piv = pivot_row[0]
        tail = pivot_row[1:]
        rank += 1
        nxt = []
        for row in rows:
            a = row[0]
            if a:
                new = [(piv * x - a * y) // prev for x, y in zip(row[1:], tail)]
            else:
                new = [piv * x // prev for x in row[1:]]
            if any(new):
                nxt.append(new)
        rows = nxt
        prev = piv
        if not rows:
            break
    return rank


def rank_fraction(M) -> int:
    """Plain Gaussian elimination over Fraction; slow, kept as an independent oracle."""
    A = [[Fraction(int(x)) for x in row] for row in _as_dense(M)]
    if not A:
        return 0
    m, n = len(A), len(A[0])
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        for i in range(r + 1, m):
            if A[i][c] != 0:
                f = A[i][c] / A[r][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        r += 1
    return r


# ---------------------------------------------------------------- rank over Q

@dataclass
class RankResult:
    rank: int
    method: str
    primes_used: list[int] = field(default_factory=list)
    certified: bool = True

    def to_dict(self) -> dict:
        return {"rank": self.rank, "method": self.method,
                "primes_used": self.primes_used, "certified": self.certified}


def random_primes(k: int, lower: int, rng: random.Random, upper: int = DENSE_PRIME_LIMIT) -> list[int]:
    """k distinct primes in (lower, upper)."""
    lower = max(lower, 2)
    if lower >= upper // 2:
        raise PrimeError(f"no room for random primes above {lower}")
    out: list[int] = []
    while len(out) < k:
        q = int(nextprime(rng.randrange(lower, upper // 2 * 2 - 1)))
        if q < upper and q not in out:
            out.append(q)
    return out


def rank_rational(M, method: str = "auto", *, n_primes: int = 2,
                  seed: int | None = 0) -> RankResult:
    """Rank over Q.

    ``method="auto"`` runs Bareiss when ``min(rows, cols) <= 256`` and the
    multi-prime modular rank otherwise.  Modular rank never exceeds the
    rational rank; the answer is the maximum over ``n_primes`` random primes,
    confirmed by one further prime that must reproduce it.  A modular rank
    equal to ``min(rows, cols)`` is exact and is flagged ``certified``.
    """
    A = _as_dense(M)
    if method not in ("auto", "bareiss", "modular"):
        raise ValueError(f"unknown rank method {method!r}")
    if method == "bareiss" or (method == "auto" and min(A.shape) <= BAREISS_THRESHOLD):
        return RankResult(rank_bareiss(A), "bareiss-exact")
    if A.size == 0:
        return RankResult(0, "modular-multiprime")
    rng = random.Random(seed)
    lower = max(A.shape)
    used = random_primes(n_primes, lower, rng)
    best = max(rank_mod_p(A, q) for q in used)
    while True:
        q = random_primes(1, lower, rng)[0]
        while q in used:
            q = random_primes(1, lower, rng)[0]
        used.append(q)
        got = rank_mod_p(A, q)
        if got == best:
            break
        best = max(best, got)
    return RankResult(best, "modular-multiprime", used, certified=best == min(A.shape))


# ---------------------------------------------------------------- sparse solving mod p

def _reduce(row: dict[int, int], pivots: dict[int, dict[int, int]], p: int) -> dict[int, int]:
    """Eliminate every pivot column from ``row`` (in increasing column order)."""
    heap = [c for c in row if c in pivots]
    heapq.heapify(heap)
    while heap:
        c = heapq.heappop(heap)
        a = row.get(c)
        if not a:
            continue
        for k, v in pivots[c].items():
            nv = (row.get(k, 0) - a * v) % p
            if nv:
                if k not in row and k in pivots:
                    heapq.heappush(heap, k)
                row[k] = nv
            else:
                row.pop(k, None)
    return row


def _echelon_pivots(rows: list[dict[int, int]], p: int) -> dict[int, dict[int, int]]:
    """Online echelon form: pivot column -> monic row whose other entries lie to the right."""
    pivots: dict[int, dict[int, int]] = {}
    for row in sorted(rows, key=len):
        row = _reduce(dict(row), pivots, p)
        if row:
            c = min(row)
            inv = pow(row[c], -1, p)
            pivots[c] = {k: v * inv % p for k, v in row.items()}
    return pivots


def solve_mod_p(rows: list[dict[int, int]], rhs: Sequence[int], ncols: int, p: int):
    """Solve ``A x = b`` over F_p with A given as sparse row dicts.

    Returns ``(x, pivot_columns)`` with free variables set to zero, or
    ``None`` when the system is inconsistent.
    """
    aug = []
    for row, b in zip(rows, rhs):
        r = {c: v % p for c, v in row.items() if v % p}
        if b % p:
            r[ncols] = b % p
        if r:
            aug.append(r)
    pivots = _echelon_pivots(aug, p)
    if ncols in pivots:
        return None
    x = [0] * ncols
    for c in sorted(pivots, reverse=True):
        prow = pivots[c]
        val = prow.get(ncols, 0)
        for k, v in prow.items():
            if k != c and k != ncols:
                val -= v * x[k]
        x[c] = val % p
    return x, frozenset(pivots)


def rational_reconstruction(u: int, m: int) -> Fraction | None:
    """Fraction a/b with a = b*u mod m and |a|, b <= sqrt(m/2), if one exists."""
    u %= m
    bound = int((m // 2) ** 0.5)
    r0, r1 = m, u
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    frac = Fraction(r1, s1)
    if (frac.numerator - frac.denominator * u) % m:
        return None
    return frac


def _lift(residues: list[list[int]], primes: list[int]) -> list[Fraction] | None:
    if len(primes) == 1:
        mod = primes[0]
        combined = residues[0]
    else:
        mod = 1
        for q in primes:
            mod *= q
        combined = [int(crt(primes, list(vals))[0]) for vals in zip(*residues)]
    out = []
    for u in combined:
        fr = rational_reconstruction(u, mod)
        if fr is None:
            return None
        out.append(fr)
    return out


def _integer_vector(fracs: list[Fraction]) -> list[int]:
    den = 1
    for f in fracs:
        den = den * f.denominator // _gcd(den, f.denominator)
    return [int(f * den) for f in fracs]


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _matvec(rows: list[dict[int, int]], x: list[int]) -> list[int]:
    return [sum(v * x[c] for c, v in row.items()) for row in rows]


def _solve_rational(rows, rhs, ncols, primes_iter, max_primes: int = 8):
    """Try to find an exact rational solution of ``A x = rhs``.

    Returns (status, value): ("solution", list[Fraction]), ("inconsistent", None)
    when the first prime finds no solution, or ("unknown", None).
    """
    residues, used, pattern = [], [], None
    for q in primes_iter:
        got = solve_mod_p(rows, rhs, ncols, q)
        if got is None:
            if not used:
                return "inconsistent", q
            continue
        x, piv = got
        if pattern is None:
            pattern = piv
        elif piv != pattern:
            continue  # unlucky prime: different pivot structure
        residues.append(x)
        used.append(q)
        sol = _lift(residues, used)
        if sol is not None:
            den_vec = _integer_vector(sol + [Fraction(1)])
            scale = den_vec[-1]
            xi = den_vec[:-1]
            if _matvec(rows, xi) == [scale * int(b) for b in rhs]:
                return "solution", sol
        if len(used) >= max_primes:
            break
    return "unknown", None


@dataclass
class SpanResult:
    """Outcome of a column-span membership test.

    ``witness`` solves ``M x = v`` when ``member``; over Q a non-member comes
    with ``certificate`` y satisfying ``y M = 0`` and ``y . v != 0``.
    """

    member: bool
    field: int
    witness: list | None = None
    certificate: list | None = None

    def __bool__(self) -> bool:
        return self.member


def _prime_stream(seed: int | None, first: int = SOLVE_PRIME):
    yield first
    rng = random.Random(seed)
    while True:
        yield int(nextprime(rng.randrange(2**60, 2**62)))


def in_column_span(M, v: Sequence[int], p: int = 0, *, seed: int | None = 0) -> SpanResult:
    """Decide whether ``v`` lies in the column span of ``M`` over F_p (``p > 0``) or Q (``p = 0``)."""
    shape = M.shape
    v = [int(x) for x in np.asarray(v).ravel()]
    if len(v) != shape[0]:
        raise ValueError(f"vector of length {len(v)} against {shape[0]} rows")
    Ms = sparse.csr_matrix(M) if not sparse.issparse(M) else M.tocsr()
    rows = _row_dicts(Ms)
    ncols = shape[1]
    if p:
        p = _check_prime(p)
        got = solve_mod_p(rows, v, ncols, p)
        return SpanResult(got is not None, p, witness=None if got is None else got[0])

    # Over Q: look for a witness x, otherwise for a left-kernel certificate y.
    Mt = Ms.T.tocsr()
    cert_rows = _row_dicts(Mt) + [{r: b for r, b in enumerate(v) if b}]
    cert_rhs = [0] * ncols + [1]
    for attempt in range(4):
        status, sol = _solve_rational(rows, v, ncols, _prime_stream(seed + attempt if seed is not None else None))
        if status == "solution":
            return SpanResult(True, 0, witness=sol)
        status, cert = _solve_rational(cert_rows, cert_rhs, shape[0],
                                       _prime_stream(seed + attempt if seed is not None else None))
        if status == "solution":
            return SpanResult(False, 0, certificate=cert)
    raise ArithmeticError("could not certify column-span membership over Q")
