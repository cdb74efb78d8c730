"""Dense linear algebra over the prime field GF(p).

Matrices are plain ``numpy`` integer arrays holding residues in ``[0, p)``.
Everything here is exact; no floating point is involved anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, -1, self.p)

    def elements(self) -> range:
        return range(self.p)


def has_sqrt_minus_one(f: PrimeField | int) -> bool:
    """True iff x**2 == -1 has a solution in GF(p)."""
    p = f.p if isinstance(f, PrimeField) else f
    return p == 2 or p % 4 == 1


def sqrt_minus_one(f: PrimeField | int) -> int | None:
    """Least nonnegative square root of -1 mod p, or None."""
    p = f.p if isinstance(f, PrimeField) else f
    for x in range(p):
        if (x * x + 1) % p == 0:
            return x
    return None


@lru_cache(maxsize=None)
def _inverse_table(p: int) -> np.ndarray:
    table = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        table[a] = pow(a, -1, p)
    return table


def as_matrix(rows, p: int) -> np.ndarray:
    m = np.array(rows, dtype=np.int64)
    if m.ndim == 1:
        m = m.reshape(1, -1) if m.size else m.reshape(0, 0)
    return m % p


def row_reduce(m: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``m`` over GF(p).

    Returns the nonzero rows of the RREF and their pivot columns.
    """
    a = np.array(m, dtype=np.int64) % p
    if a.ndim != 2:
        raise ValueError("expected a 2-d array")
    rows, cols = a.shape
    inv = _inverse_table(p)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = (a[r] * inv[a[r, c]]) % p
        col = a[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            a[nzr] = (a[nzr] - np.outer(col[nzr], a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(m: np.ndarray, p: int) -> int:
    return len(row_reduce(m, p)[1])


@dataclass(frozen=True)
class Subspace:
    """Row space of a matrix, stored as its canonical RREF basis."""

    p: int
    ambient_dim: int
    basis: tuple[tuple[int, ...], ...]
    pivots: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def matrix(self) -> np.ndarray:
        if not self.basis:
            return np.zeros((0, self.ambient_dim), dtype=np.int64)
        return np.array(self.basis, dtype=np.int64)

    def contains(self, v) -> bool:
        return not self.reduce(v).any()

    def reduce(self, v) -> np.ndarray:
        """Normal form of ``v`` modulo this subspace (pivot entries cleared)."""
        v = np.array(v, dtype=np.int64) % self.p
        for row, c in zip(self.basis, self.pivots):
            if v[c]:
                v = (v - v[c] * np.array(row, dtype=np.int64)) % self.p
        return v

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        return span(np.vstack([self.matrix(), other.matrix()]), self.p, self.ambient_dim)

    def intersect(self, other: "Subspace") -> "Subspace":
        # x in both: x = a U = b W  <=>  (a, b) in left kernel of [U; -W]
        if self.dim == 0 or other.dim == 0:
            return zero_space(self.p, self.ambient_dim)
        stacked = np.vstack([self.matrix(), (-other.matrix()) % self.p])
        ker = solve_left_kernel(stacked, self.p)
        if ker.dim == 0:
            return zero_space(self.p, self.ambient_dim)
        coeffs = ker.matrix()[:, : self.dim]
        return span(coeffs @ self.matrix(), self.p, self.ambient_dim)


def zero_space(p: int, n: int) -> Subspace:
    return Subspace(p, n, (), ())


def full_space(p: int, n: int) -> Subspace:
    return span(np.eye(n, dtype=np.int64), p, n)


def rref(m, p: int) -> Subspace:
    """Canonical RREF basis of the row space of ``m``."""
    m = np.array(m, dtype=np.int64)
    if m.ndim == 1:
        m = m.reshape(1, -1)
    red, piv = row_reduce(m, p)
    return Subspace(p, m.shape[1], tuple(tuple(int(x) for x in row) for row in red), tuple(piv))


def span(vectors, p: int, n: int) -> Subspace:
    m = np.array(vectors, dtype=np.int64)
    if n == 0 or m.size == 0:
        return zero_space(p, n)
    m = m.reshape(-1, n)
    if m.shape[0] == 0:
        return zero_space(p, n)
    return rref(m, p)


def solve_left_kernel(m, p: int) -> Subspace:
    """The space ``{x : x @ m == 0}`` over GF(p)."""
    m = np.array(m, dtype=np.int64) % p
    rows = m.shape[0]
    if m.size == 0 or m.shape[1] == 0:
        return full_space(p, rows)
    # null space of m^T, via RREF of m^T
    red, piv = row_reduce(m.T, p)
    free = [j for j in range(rows) if j not in piv]
    basis = []
    for f in free:
        x = np.zeros(rows, dtype=np.int64)
        x[f] = 1
        for i, c in enumerate(piv):
            x[c] = (-red[i, f]) % p
        basis.append(x)
    return span(basis, p, rows) if basis else zero_space(p, rows)


def solve_affine(a: np.ndarray, b: np.ndarray, p: int):
    """Solve ``a @ x == b`` over GF(p).

    Returns ``(x0, null)`` with ``x0`` a particular solution and ``null`` a
    matrix whose rows span the solution directions, or ``None`` when the
    system is inconsistent.
    """
    a = np.array(a, dtype=np.int64) % p
    b = np.array(b, dtype=np.int64).reshape(-1) % p
    nvars = a.shape[1]
    aug = np.hstack([a, b.reshape(-1, 1)])
    red, piv = row_reduce(aug, p)
    if piv and piv[-1] == nvars:
        return None
    x0 = np.zeros(nvars, dtype=np.int64)
    for i, c in enumerate(piv):
        x0[c] = red[i, nvars]
    free = [j for j in range(nvars) if j not in piv]
    null = np.zeros((len(free), nvars), dtype=np.int64)
    for k, f in enumerate(free):
        null[k, f] = 1
        for i, c in enumerate(piv):
            null[k, c] = (-red[i, f]) % p
    return x0, null


def _eliminate_batch(aug: np.ndarray, ncols: int, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Row reduce a stack of matrices on their first ``ncols`` columns.
    Returns the reduced stack and the rank of each."""
    aug = aug % p
    batch, rows, _ = aug.shape
    inv = _inverse_table(p)
    nxt = np.zeros(batch, dtype=np.int64)
    ridx = np.arange(rows)
    for j in range(ncols):
        mask = (aug[:, :, j] != 0) & (ridx[None, :] >= nxt[:, None])
        has = np.nonzero(mask.any(axis=1))[0]
        if has.size == 0:
            continue
        piv = mask[has].argmax(axis=1)
        top = nxt[has]
        pr, tr = aug[has, piv].copy(), aug[has, top].copy()
        aug[has, piv], aug[has, top] = tr, pr
        lead = (pr * inv[pr[:, j]][:, None]) % p
        aug[has, top] = lead
        factors = aug[has, :, j].copy()
        factors[np.arange(has.size), top] = 0
        aug[has] = (aug[has] - factors[:, :, None] * lead[:, None, :]) % p
        nxt[has] += 1
    return aug, nxt


def solvable_batch(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """For a stack of systems ``a[i] @ x == b[i]``, which ones are consistent.

    Gaussian elimination runs on all systems at once, one column at a time.
    """
    a = np.asarray(a, dtype=np.int64) % p
    nvars = a.shape[2]
    if a.shape[0] == 0:
        return np.zeros(0, dtype=bool)
    aug = np.concatenate([a, (np.asarray(b, dtype=np.int64) % p)[..., None]], axis=2)
    aug, _ = _eliminate_batch(aug, nvars, p)
    stuck = ~aug[:, :, :nvars].any(axis=2) & (aug[:, :, nvars] != 0)
    return ~stuck.any(axis=1)


def rank_batch(m: np.ndarray, p: int) -> np.ndarray:
    """Ranks of a stack of matrices over GF(p)."""
    m = np.array(m, dtype=np.int64)
    if m.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    return _eliminate_batch(m, m.shape[2], p)[1]


def inverse(m: np.ndarray, p: int) -> np.ndarray:
    n = m.shape[0]
    aug = np.hstack([np.array(m, dtype=np.int64) % p, np.eye(n, dtype=np.int64)])
    red, piv = row_reduce(aug, p)
    if piv[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return red[:n, n:]


def is_invertible(m: np.ndarray, p: int) -> bool:
    return m.shape[0] == m.shape[1] and rank(m, p) == m.shape[0]
