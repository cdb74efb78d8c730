"""Nilpotent associative algebras over GF(p) given by structure constants.

The isomorphism test lifts a map on generators through the power series
``A > A^2 > ... > A^c > 0``.  A map is determined by the images of a minimal
generating set.  Once the images are fixed modulo ``B^s``, every
homomorphism condition modulo ``B^(2s)`` is an affine equation in the
remaining coordinates, so the search only branches over the first half of
the layers and finishes with one linear solve.  Branches that differ by an
automorphism of the source are skipped.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np

from .linalg import (PrimeField, Subspace, full_space, inverse, is_invertible, rank, rank_batch,
                     rref, solvable_batch, solve_affine, solve_left_kernel, span, zero_space)
from .semigroup import ZERO, NotNilpotent, SemigroupTable


class NotAnIdeal(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


class Exhausted(RuntimeError):
    """The isomorphism search hit its node budget without an answer."""


class Algebra:
    """Associative algebra with ``e_i e_j = sum_k sc[i, j, k] e_k``."""

    def __init__(self, field: PrimeField | int, sc, names: Sequence[str] | None = None,
                 check: bool = True):
        self.field = field if isinstance(field, PrimeField) else PrimeField(field)
        p = self.field.p
        sc = np.array(sc, dtype=np.int64) % p
        if sc.size == 0:
            sc = np.zeros((0, 0, 0), dtype=np.int64)
        n = sc.shape[0]
        if sc.shape != (n, n, n):
            raise ValueError("structure constants must have shape (n, n, n)")
        self.sc = sc
        self.sc.setflags(write=False)
        self.names = list(names) if names is not None else None
        if check and not self.is_associative():
            raise ValueError("structure constants are not associative")

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def dim(self) -> int:
        return self.sc.shape[0]

    def __repr__(self):
        return f"<Algebra dim={self.dim} over GF({self.p})>"

    def mul(self, x, y) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        return np.einsum("i,j,ijk->k", x, y, self.sc) % self.p

    def is_associative(self) -> bool:
        n, p = self.dim, self.p
        if n == 0:
            return True
        # (e_i e_j) e_k  vs  e_i (e_j e_k)
        left = np.einsum("ijm,mkl->ijkl", self.sc, self.sc) % p
        right = np.einsum("jkm,iml->ijkl", self.sc, self.sc) % p
        return bool(np.array_equal(left, right))

    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.sc, self.sc.transpose(1, 0, 2)))

    # ------------------------------------------------------------ ideals

    def products(self, left: Subspace, right: Subspace) -> Subspace:
        n, p = self.dim, self.p
        if left.dim == 0 or right.dim == 0:
            return zero_space(p, n)
        prods = np.einsum("ai,bj,ijk->abk", left.matrix(), right.matrix(), self.sc) % p
        return span(prods.reshape(-1, n), p, n)

    @cached_property
    def power_series(self) -> list[Subspace]:
        """``[A, A^2, ..., A^(c+1) = 0]``."""
        n, p = self.dim, self.p
        whole = full_space(p, n)
        series = [whole]
        while series[-1].dim > 0:
            nxt = self.products(series[-1], whole)
            if nxt.dim == series[-1].dim:
                raise NotNilpotent("power series does not reach zero")
            series.append(nxt)
        return series

    def power_ideal(self, i: int) -> Subspace:
        if i < 1:
            raise ValueError("power index starts at 1")
        series = self.power_series
        return series[i - 1] if i <= len(series) else zero_space(self.p, self.dim)

    @property
    def nilpotency_class(self) -> int:
        return len(self.power_series) - 1

    @property
    def coclass(self) -> int:
        return self.dim - self.nilpotency_class

    @property
    def generator_number(self) -> int:
        return self.dim - self.power_ideal(2).dim

    @cached_property
    def left_annihilator(self) -> Subspace:
        n = self.dim
        return solve_left_kernel(self.sc.reshape(n, n * n), self.p)

    @cached_property
    def right_annihilator(self) -> Subspace:
        n = self.dim
        return solve_left_kernel(self.sc.transpose(1, 0, 2).reshape(n, n * n), self.p)

    @cached_property
    def annihilator(self) -> Subspace:
        return self.left_annihilator.intersect(self.right_annihilator)

    def is_ideal(self, sub: Subspace) -> bool:
        whole = full_space(self.p, self.dim)
        return (sub.contains_space(self.products(whole, sub))
                and sub.contains_space(self.products(sub, whole)))

    @cached_property
    def fingerprint(self) -> tuple:
        series = self.power_series
        ann = self.annihilator
        return (self.dim, self.nilpotency_class, self.coclass,
                tuple(s.dim for s in series),
                ann.dim, self.left_annihilator.dim, self.right_annihilator.dim,
                self.is_commutative(),
                tuple(ann.intersect(s).dim for s in series))

    def to_record(self) -> dict:
        return {"p": self.p, "dim": self.dim, "sc": self.sc.tolist(),
                "names": self.names or [], "fingerprint": _jsonable(self.fingerprint)}

    @classmethod
    def from_record(cls, rec: dict) -> "Algebra":
        sc = np.array(rec["sc"], dtype=np.int64).reshape(rec["dim"], rec["dim"], rec["dim"])
        return cls(rec["p"], sc, rec.get("names") or None)

    @cached_property
    def _graded(self) -> "_Graded":
        return _Graded(self)


def _jsonable(x):
    if isinstance(x, (tuple, list)):
        return [_jsonable(y) for y in x]
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    return int(x)


# ---------------------------------------------------------------- constructions

def zero_algebra(f: PrimeField | int, n: int) -> Algebra:
    return Algebra(f, np.zeros((n, n, n), dtype=np.int64))


def contracted_algebra(s: SemigroupTable, f: PrimeField | int) -> Algebra:
    """``K[S]`` modulo the span of the zero; basis = nonzero elements."""
    n = s.order - 1
    sc = np.zeros((n, n, n), dtype=np.int64)
    for a in range(1, s.order):
        for b in range(1, s.order):
            c = s.table[a][b]
            if c != ZERO:
                sc[a - 1, b - 1, c - 1] = 1
    names = [f"{s.origin}#{i}" if s.origin else str(i) for i in range(1, s.order)]
    return Algebra(f, sc, names, check=False)


def power_ideal(a: Algebra, i: int) -> Subspace:
    return a.power_ideal(i)


def algebra_class(a: Algebra) -> int:
    return a.nilpotency_class


def algebra_coclass(a: Algebra) -> int:
    return a.coclass


def annihilator(a: Algebra) -> Subspace:
    return a.annihilator


def left_annihilator(a: Algebra) -> Subspace:
    return a.left_annihilator


def right_annihilator(a: Algebra) -> Subspace:
    return a.right_annihilator


def is_commutative(a: Algebra) -> bool:
    return a.is_commutative()


def fingerprint(a: Algebra) -> tuple:
    return a.fingerprint


def quotient_algebra(a: Algebra, ideal: Subspace) -> Algebra:
    """``A / I`` on the basis of unit vectors outside the pivots of ``I``."""
    if not a.is_ideal(ideal):
        raise NotAnIdeal("subspace is not a two-sided ideal")
    keep = [j for j in range(a.dim) if j not in ideal.pivots]
    m = len(keep)
    sc = np.zeros((m, m, m), dtype=np.int64)
    for x, i in enumerate(keep):
        for y, j in enumerate(keep):
            sc[x, y] = ideal.reduce(a.sc[i, j])[keep]
    names = [a.names[j] for j in keep] if a.names else None
    return Algebra(a.field, sc, names, check=False)


def top_quotient(a: Algebra) -> Algebra:
    """``A / A^c`` for ``c`` the class of ``A``."""
    return quotient_algebra(a, a.power_ideal(a.nilpotency_class))


def change_basis(a: Algebra, m) -> Algebra:
    """The same algebra written in the basis given by the rows of ``m``."""
    p = a.p
    m = np.array(m, dtype=np.int64) % p
    minv = inverse(m, p)
    prods = np.einsum("ai,bj,ijk->abk", m, m, a.sc) % p
    return Algebra(a.field, np.einsum("abk,kl->abl", prods, minv) % p, check=False)


# ---------------------------------------------------------------- isomorphisms

@dataclass(frozen=True)
class AlgebraIso:
    """Row convention: the image of ``e_i`` is row ``i`` of ``matrix``."""

    matrix: np.ndarray = field(repr=False)

    def validates(self, a: Algebra, b: Algebra) -> bool:
        m = np.asarray(self.matrix, dtype=np.int64) % a.p
        if a.p != b.p or m.shape != (a.dim, b.dim) or a.dim != b.dim:
            return False
        if not is_invertible(m, a.p):
            return False
        # mu(e_i) mu(e_j) == mu(e_i e_j)
        lhs = np.einsum("ix,jy,xyk->ijk", m, m, b.sc) % a.p
        rhs = np.einsum("ijx,xk->ijk", a.sc, m) % a.p
        return bool(np.array_equal(lhs, rhs))

    def apply(self, v) -> np.ndarray:
        return np.asarray(v, dtype=np.int64) @ self.matrix


def map_from_generators(a: Algebra, b: Algebra, words: Sequence[Sequence[int]],
                        images: Sequence) -> np.ndarray:
    """Matrix sending basis vector ``i`` of ``a`` to the product of images.

    ``words[i]`` lists generator indices whose product (left to right) is
    ``e_i``; ``images[g]`` is the image of generator ``g`` in ``b``.
    """
    rows = []
    for w in words:
        v = np.asarray(images[w[0]], dtype=np.int64) % b.p
        for g in w[1:]:
            v = b.mul(v, images[g])
        rows.append(v)
    return np.array(rows, dtype=np.int64).reshape(a.dim, b.dim) % b.p


class _Graded:
    """An algebra rewritten in a basis of generator words adapted to its power series."""

    def __init__(self, a: Algebra):
        self.alg = a
        p, n = a.p, a.dim
        series = a.power_series
        self.cls = len(series) - 1
        sq = series[1] if len(series) > 1 else zero_space(p, n)
        gen_cols = [j for j in range(n) if j not in sq.pivots]
        rows: list[np.ndarray] = []
        layer: list[int] = []
        recipe: list[tuple[int, int]] = []    # (generator, previous basis index or -1)
        eye = np.eye(n, dtype=np.int64)
        for i, j in enumerate(gen_cols):
            rows.append(eye[j])
            layer.append(1)
            recipe.append((i, -1))
        self.d = len(gen_cols)
        prev = list(range(self.d))
        for k in range(2, self.cls + 1):
            target = series[k - 1].dim - series[k].dim
            current = series[k]
            chosen = []
            for w in prev:
                for g in range(self.d):
                    if len(chosen) == target:
                        break
                    v = a.mul(rows[g], rows[w])
                    if not current.contains(v):
                        current = current + span(v, p, n)
                        chosen.append(len(rows))
                        rows.append(v)
                        layer.append(k)
                        recipe.append((g, w))
            if len(chosen) != target:
                raise NotNilpotent("could not build a word basis")
            prev = chosen
        self.basis = np.array(rows, dtype=np.int64).reshape(n, n) % p
        self.basis_inv = inverse(self.basis, p) if n else self.basis
        self.layer = np.array(layer, dtype=np.int64)
        self.recipe = recipe
        prods = np.einsum("ai,bj,ijk->abk", self.basis, self.basis, a.sc) % p
        self.sc = np.einsum("abk,kl->abl", prods, self.basis_inv) % p
        self.n = n
        self.p = p
        self._gauge: dict[int, np.ndarray] | None = None

    def layer_idx(self, s: int) -> np.ndarray:
        return np.nonzero(self.layer == s)[0]

    def word(self, j: int) -> list[int]:
        g, prev = self.recipe[j]
        return [g] if prev < 0 else [g] + self.word(prev)


class _Search:
    """Lift generator images from ``src`` to ``dst`` layer by layer."""

    def __init__(self, src: _Graded, dst: _Graded, budget: int, use_gauge: bool = True):
        self.src, self.dst = src, dst
        self.p = src.p
        self.n = src.n
        self.d = src.d
        self.budget = budget
        self.nodes = 0
        self.use_gauge = use_gauge
        self.cls = dst.cls
        self.exhausted = False

    # images of every source basis word, batched over leading axis
    def images(self, y: np.ndarray) -> np.ndarray:
        p, n = self.p, self.n
        sc = self.dst.sc.reshape(n, n * n)
        phi = np.zeros((y.shape[0], n, n), dtype=np.int64)
        for j, (g, prev) in enumerate(self.src.recipe):
            if prev < 0:
                phi[:, j] = y[:, g]
            else:
                x = y[:, g]
                z = phi[:, prev]
                phi[:, j] = np.einsum("bi,bj,ijk->bk", x, z, self.dst.sc) % p
        del sc
        return phi

    def residual(self, y: np.ndarray, rows: np.ndarray) -> np.ndarray:
        """Homomorphism defect on coordinates ``rows``, flattened per batch."""
        p, n = self.p, self.n
        phi = self.images(y)
        t1 = (phi @ self.dst.sc.reshape(n, n * n)) % p            # [z, a, k*l]
        t1 = t1.reshape(-1, n, n, n)                              # [z, a, k, l]
        pp = np.matmul(phi[:, None, :, :], t1) % p                # [z, a, b, l]
        q = np.matmul(self.src.sc.reshape(n * n, n)[None], phi) % p   # [z, a*b, l]
        res = (pp.reshape(-1, n * n, n) - q) % p
        return res[:, :, rows].reshape(y.shape[0], -1)

    def affine_system(self, y: np.ndarray, var_layers_from: int, row_layer_below: int):
        """Constraints on coordinates of layer < bound, affine in the unknowns."""
        dst = self.dst
        var_cols = np.nonzero(dst.layer >= var_layers_from)[0]
        variables = [(g, c) for g in range(self.d) for c in var_cols]
        rows = np.nonzero(dst.layer < row_layer_below)[0]
        batch = np.repeat(y[None], len(variables) + 1, axis=0)
        for v, (g, c) in enumerate(variables, start=1):
            batch[v, g, c] = (batch[v, g, c] + 1) % self.p
        res = self.residual(batch, rows)
        base = res[0]
        jac = (res[1:] - base) % self.p
        keep = np.nonzero(jac.any(axis=0) | (base != 0))[0]
        return variables, jac[:, keep].T, (-base[keep]) % self.p

    def tick(self, count: int = 1):
        self.nodes += count
        if self.nodes > self.budget:
            self.exhausted = True
            raise Exhausted(f"isomorphism search exceeded {self.budget} nodes")

    def final(self, s: int) -> bool:
        return s > self.cls or 2 * s - 1 >= self.cls

    def bound(self, s: int) -> int:
        return self.cls + 1 if self.final(s) else 2 * s

    def solvable(self, ys: np.ndarray, s: int) -> np.ndarray:
        """Which partial maps in the batch ``ys`` admit stage ``s`` values."""
        p, d = self.p, self.d
        var_cols = np.nonzero(self.dst.layer >= s)[0]
        rows = np.nonzero(self.dst.layer < self.bound(s))[0]
        nv = d * len(var_cols)
        out = np.zeros(len(ys), dtype=bool)
        step = max(1, CHILD_CHUNK // (nv + 1))
        for start in range(0, len(ys), step):
            part = ys[start:start + step]
            batch = np.repeat(part[:, None], nv + 1, axis=1)
            v = 1
            for g in range(d):
                for c in var_cols:
                    batch[:, v, g, c] = (batch[:, v, g, c] + 1) % p
                    v += 1
            res = self.residual(batch.reshape(-1, d, self.n), rows).reshape(len(part), nv + 1, -1)
            base = res[:, 0]
            jac = (res[:, 1:] - base[:, None]) % p
            out[start:start + step] = solvable_batch(np.swapaxes(jac, 1, 2), (-base) % p, p)
        return out

    def run_from(self, s: int, y: np.ndarray):
        self.tick()
        p = self.p
        if self.final(s):
            variables, a, b = self.affine_system(y, s, self.cls + 1)
            sol = solve_affine(a, b, p)
            if sol is None:
                return None
            x0, _ = sol
            out = y.copy()
            for v, (g, c) in enumerate(variables):
                out[g, c] = (out[g, c] + x0[v]) % p
            return out
        variables, a, b = self.affine_system(y, s, 2 * s)
        sol = solve_affine(a, b, p)
        if sol is None:
            return None
        x0, null = sol
        stage_cols = set(self.dst.layer_idx(s).tolist())
        proj = [v for v, (g, c) in enumerate(variables) if c in stage_cols]
        v0 = x0[proj]
        directions = null[:, proj] if null.size else np.zeros((0, len(proj)), dtype=np.int64)
        gauge = self.gauge_directions(s, y) if self.use_gauge else np.zeros((0, len(proj)), dtype=np.int64)
        free = _complement(directions, gauge, p)
        gs = np.array([variables[v][0] for v in proj], dtype=np.int64)
        cs = np.array([variables[v][1] for v in proj], dtype=np.int64)
        coeffs = itertools.product(range(p), repeat=len(free))
        size = 16
        while True:
            block = np.array(list(itertools.islice(coeffs, size)), dtype=np.int64)
            if not len(block):
                return None
            size = min(4 * size, CHILD_CHUNK)
            vals = (v0[None] + block.reshape(len(block), -1) @ free) % p
            ys = np.repeat(y[None], len(vals), axis=0)
            ys[:, gs, cs] = vals
            self.tick(len(ys))
            for child in ys[self.solvable(ys, s + 1)]:
                found = self.run_from(s + 1, child)
                if found is not None:
                    return found

    def gauge_directions(self, s: int, y: np.ndarray) -> np.ndarray:
        """Images under the current partial map of known automorphism directions."""
        src_dirs = self.src_gauge(s)
        dst_cols = self.dst.layer_idx(s)
        if src_dirs.shape[0] == 0:
            return np.zeros((0, self.d * len(dst_cols)), dtype=np.int64)
        phi = self.images(y[None])[0]
        src_cols = self.src.layer_idx(s)
        lift = phi[src_cols][:, dst_cols]                      # layer-s map, src -> dst
        k = len(src_cols)
        out = []
        for vec in src_dirs:
            parts = vec.reshape(self.d, k)
            out.append(((parts @ lift) % self.p).reshape(-1))
        return np.array(out, dtype=np.int64)

    def src_gauge(self, s: int) -> np.ndarray:
        return automorphism_gauge(self.src).get(s, np.zeros((0, 0), dtype=np.int64))


def _complement(directions: np.ndarray, gauge: np.ndarray, p: int) -> np.ndarray:
    """Directions spanning ``span(directions)`` modulo ``span(gauge)``."""
    if directions.shape[0] == 0:
        return directions
    ncols = directions.shape[1]
    current = span(gauge, p, ncols) if gauge.size else zero_space(p, ncols)
    keep = []
    for v in directions:
        if not current.contains(v):
            keep.append(v % p)
            current = current + span(v, p, ncols)
    return np.array(keep, dtype=np.int64).reshape(-1, ncols)


GAUGE_BUDGET = 50_000
CHILD_CHUNK = 4096


def automorphism_gauge(a: "_Graded") -> dict[int, np.ndarray]:
    """For each branching layer s, directions delta in (A^s/A^(s+1))^d known
    to occur as ``g_i -> g_i + delta_i + ...`` for an automorphism of A.

    Only directions actually realised by a found automorphism are recorded,
    so skipping branches along them never loses an isomorphism.
    """
    if a._gauge is not None:
        return a._gauge
    gauge: dict[int, np.ndarray] = {}
    a._gauge = gauge
    p, d = a.p, a.d
    top = [s for s in range(2, a.cls + 1) if 2 * s - 1 < a.cls]
    ident = np.zeros((d, a.n), dtype=np.int64)
    for g in range(d):
        ident[g, g] = 1
    for s in sorted(top, reverse=True):
        cols = a.layer_idx(s)
        k = len(cols)
        found = np.zeros((0, d * k), dtype=np.int64)
        space = zero_space(p, d * k)
        for g in range(d):
            for idx, c in enumerate(cols):
                vec = np.zeros(d * k, dtype=np.int64)
                vec[g * k + idx] = 1
                if space.contains(vec):
                    continue
                y = ident.copy()
                y[g, c] = 1
                search = _Search(a, a, GAUGE_BUDGET)
                try:
                    hit = search.run_from(s + 1, y)
                except Exhausted:
                    hit = None
                if hit is not None:
                    found = np.vstack([found, vec])
                    space = space + span(vec, p, d * k)
        gauge[s] = found
    return gauge


GL_TABLE_LIMIT = 2_000_000


@lru_cache(maxsize=None)
def _general_linear(p: int, d: int) -> np.ndarray | None:
    """All of GL_d(p) as a (N, d, d) array, or None when too large to list."""
    total = p ** (d * d)
    if total > GL_TABLE_LIMIT:
        return None
    idx = np.arange(total, dtype=np.int64)
    digits = (idx[:, None] // (p ** np.arange(d * d, dtype=np.int64)[::-1])[None]) % p
    mats = digits.reshape(-1, d, d)
    # entries are tiny, so the float determinant rounds exactly
    det = np.rint(np.linalg.det(mats.astype(float))).astype(np.int64) % p
    out = mats[det != 0]
    out.setflags(write=False)
    return out


def _square_relations(g) -> tuple[np.ndarray, np.ndarray]:
    """Products of generators modulo the cube, as a (d*d, k) matrix B, and a
    basis of its left kernel (relations among the products)."""
    gens, sq = g.layer_idx(1), g.layer_idx(2)
    b = g.sc[np.ix_(gens, gens, sq)].reshape(len(gens) ** 2, len(sq)) % g.p
    rel = solve_left_kernel(b, g.p).matrix()
    return b, rel


def _stage_one_candidates(src: _Graded, dst: _Graded):
    """Invertible generator maps that respect products modulo the cube.

    ``M`` qualifies iff ``M^T K M`` is a relation of ``dst`` for every
    relation ``K`` of ``src``; equal dimensions then make the induced map on
    the squares invertible.
    """
    p, d = src.p, src.d
    if dst.d != d or len(src.layer_idx(2)) != len(dst.layer_idx(2)):
        return
    b_src, rel = _square_relations(src)
    b, _ = _square_relations(dst)
    key = (p, d, rel.shape, rel.astype(np.int64).tobytes(), b.shape, b.astype(np.int64).tobytes())
    cached = _CANDIDATE_CACHE.get(key)
    if cached is None:
        cached = _solve_stage_one(p, d, rel.reshape(-1, d, d), b)
        if len(_CANDIDATE_CACHE) >= CANDIDATE_CACHE_SIZE:
            _CANDIDATE_CACHE.pop(next(iter(_CANDIDATE_CACHE)))
        _CANDIDATE_CACHE[key] = cached
    if cached is not None:
        yield from cached
        return
    yield from _stage_one_rows(p, d, rel, b, b_src)


CANDIDATE_CACHE_SIZE = 512
_CANDIDATE_CACHE: dict[tuple, np.ndarray | None] = {}


def _respects(mats: np.ndarray, kappas: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if kappas.shape[0] == 0 or b.shape[1] == 0:
        return np.ones(len(mats), dtype=bool)
    d = mats.shape[1]
    left = (np.swapaxes(mats, 1, 2)[:, None] @ kappas[None]) % p
    img = ((left @ mats[:, None]) % p).reshape(len(mats), kappas.shape[0], d * d)
    return ~((img @ b) % p).any(axis=(1, 2))


def _solve_stage_one(p: int, d: int, kappas: np.ndarray, b: np.ndarray) -> np.ndarray | None:
    table = _general_linear(p, d)
    if table is None:
        return None
    chunk = 50_000
    parts = [table[s:s + chunk][_respects(table[s:s + chunk], kappas, b, p)]
             for s in range(0, len(table), chunk)]
    out = np.concatenate(parts) if parts else np.zeros((0, d, d), dtype=np.int64)
    out.setflags(write=False)
    return out


def _stage_one_rows(p: int, d: int, rel: np.ndarray, b: np.ndarray, b_src: np.ndarray):
    """Row-by-row version of the stage-one scan for when GL_d(p) is too big
    to list.  Matrices come out in the same lexicographic order as the table.

    A partial assignment of rows ``0..k`` is kept only if the relations that
    involve just those generators hold and their products span a space of
    the same dimension as on the source side; both hold for every complete
    candidate, so nothing is lost.
    """
    vectors = np.array(list(itertools.product(range(p), repeat=d)), dtype=np.int64)[1:]
    space = span(rel, p, d * d)
    staged, ranks = [], []
    for k in range(d):
        inside = [i * d + j for i in range(k + 1) for j in range(k + 1)]
        local = space.intersect(span(np.eye(d * d, dtype=np.int64)[inside], p, d * d))
        staged.append(local.matrix().reshape(-1, d, d)[:, : k + 1, : k + 1])
        ranks.append(rank(b_src[inside], p) if b_src.shape[1] else 0)

    def rec(rows: np.ndarray):
        k = len(rows)
        if k == d:
            yield rows.copy()
            return
        cand = vectors
        if k:
            sub = rref(rows, p)
            resid = (cand - cand[:, list(sub.pivots)] @ sub.matrix()) % p
            cand = cand[resid.any(axis=1)]
        if b.shape[1] and len(cand):
            mats = np.concatenate([np.broadcast_to(rows, (len(cand), k, d)), cand[:, None, :]], axis=1)
            kappas = staged[k]
            if len(kappas):
                left = (np.swapaxes(mats, 1, 2)[:, None] @ kappas[None]) % p
                img = ((left @ mats[:, None]) % p).reshape(len(mats), len(kappas), d * d)
                keep = ~((img @ b) % p).any(axis=(1, 2))
                cand, mats = cand[keep], mats[keep]
            prods = np.einsum("cia,cjb->cijab", mats, mats).reshape(len(mats), (k + 1) ** 2, d * d)
            cand = cand[rank_batch((prods % p) @ b, p) == ranks[k]]
        for v in cand:
            yield from rec(np.vstack([rows, v[None, :]]))

    yield from rec(np.zeros((0, d), dtype=np.int64))


DEFAULT_BUDGET = 5_000_000
STAGE_ONE_LAZY = 8
STAGE_ONE_SCAN = 20_000       # candidates examined for the gauge when GL is not listed


def _orbit_keys(m: np.ndarray, group: list[np.ndarray] | None, p: int) -> set[bytes]:
    if not group:
        return {(m % p).astype(np.int64).tobytes()}
    return {((t @ m) % p).astype(np.int64).tobytes() for t in group}


def stage_one_group(g: _Graded) -> list[np.ndarray]:
    """Generator-level parts ``T`` of automorphisms ``g_i -> sum_j T_ij g_j + ...``.

    Every element is closed from verified automorphisms; candidates whose
    search runs out of budget are left out, which only weakens pruning.
    """
    if getattr(g, "_stage_one", None) is not None:
        return g._stage_one
    p, d = g.p, g.d
    ident = np.eye(d, dtype=np.int64)
    members = {ident.tobytes(): ident}
    gens: list[np.ndarray] = []
    bad: set[bytes] = set()
    scan = _stage_one_candidates(g, g)
    if _general_linear(p, d) is None:
        scan = itertools.islice(scan, STAGE_ONE_SCAN)
    for t in scan:
        key = t.astype(np.int64).tobytes()
        if key in members or key in bad:
            continue
        y = np.zeros((d, g.n), dtype=np.int64)
        y[:, g.layer_idx(1)] = t
        try:
            hit = _Search(g, g, GAUGE_BUDGET).run_from(2, y)
        except Exhausted:
            continue
        if hit is None:
            bad |= {((h @ t) % p).astype(np.int64).tobytes() for h in members.values()}
            continue
        gens.append(t.astype(np.int64))
        frontier = list(members.values())
        while frontier:
            new = []
            for h in frontier:
                for x in gens:
                    prod = (x @ h) % p
                    k = prod.tobytes()
                    if k not in members:
                        members[k] = prod
                        new.append(prod)
            frontier = new
    g._stage_one = list(members.values())
    return g._stage_one


def iso_algebras(a: Algebra, b: Algebra, budget: int = DEFAULT_BUDGET) -> AlgebraIso | None:
    """An isomorphism ``a -> b`` if one exists, else None.

    Raises DimensionMismatch for unequal dimensions and Exhausted when the
    search exceeds ``budget`` nodes (never reported as non-isomorphic).
    """
    if a.p != b.p:
        raise ValueError("algebras over different fields")
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimensions {a.dim} and {b.dim}")
    if a.fingerprint != b.fingerprint:
        return None
    src, dst = a._graded, b._graded
    p, n = a.p, a.dim
    if n == 0:
        return AlgebraIso(np.zeros((0, 0), dtype=np.int64))
    search = _Search(src, dst, budget)
    gens = dst.layer_idx(1)
    tried: set[bytes] = set()
    group = None
    for count, m in enumerate(_stage_one_candidates(src, dst)):
        if count == STAGE_ONE_LAZY:
            group = stage_one_group(src)
            for key in list(tried):
                tried |= _orbit_keys(np.frombuffer(key, dtype=np.int64).reshape(m.shape), group, p)
        key = (m % p).astype(np.int64).tobytes()
        if key in tried:
            continue
        tried |= _orbit_keys(m, group, p) if group is not None else {key}
        y = np.zeros((src.d, n), dtype=np.int64)
        y[:, gens] = m
        found = search.run_from(2, y)
        if found is not None:
            phi = search.images(found[None])[0]
            mat = (src.basis_inv @ phi @ dst.basis) % p
            iso = AlgebraIso(mat)
            if not iso.validates(a, b):
                raise AssertionError("internal error: lifted map does not validate")
            return iso
    return None


def brute_force_iso(a: Algebra, b: Algebra) -> AlgebraIso | None:
    """Exhaustive search over invertible matrices, assigning rows in order and
    rejecting as soon as a product relation among assigned rows fails.

    Independent of the lifting search: all ``p^n`` candidate rows are
    screened at each step, nothing about the power series is used.
    """
    if a.dim != b.dim or a.p != b.p:
        return None
    p, n = a.p, a.dim
    if n == 0:
        return AlgebraIso(np.zeros((0, 0), dtype=np.int64))
    vectors = np.array(list(itertools.product(range(p), repeat=n)), dtype=np.int64)
    # the relation e_i e_j = sum c_l e_l is checkable once rows i, j and the
    # support of the product are all assigned
    ready: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            support = np.nonzero(a.sc[i, j])[0]
            ready[max(i, j, int(support.max()) if support.size else -1)].append((i, j))

    def survivors(rows: np.ndarray, k: int) -> np.ndarray:
        cand = vectors
        if k:
            sub = rref(rows, p)
            resid = (cand - cand[:, list(sub.pivots)] @ sub.matrix()) % p
            cand = cand[resid.any(axis=1)]
        else:
            cand = cand[cand.any(axis=1)]
        for i, j in ready[k]:
            if not len(cand):
                break
            ri = cand if i == k else np.broadcast_to(rows[i], cand.shape)
            rj = cand if j == k else np.broadcast_to(rows[j], cand.shape)
            lhs = np.einsum("ci,cj,ijk->ck", ri, rj, b.sc) % p
            rhs = ((a.sc[i, j, :k] @ rows)[None, :] + a.sc[i, j, k] * cand) % p
            cand = cand[(lhs == rhs).all(axis=1)]
        return cand

    def rec(rows: np.ndarray):
        k = len(rows)
        if k == n:
            iso = AlgebraIso(rows.copy())
            return iso if iso.validates(a, b) else None
        for v in survivors(rows, k):
            got = rec(np.vstack([rows, v[None, :]]))
            if got is not None:
                return got
        return None

    return rec(np.zeros((0, n), dtype=np.int64))


def group_by_isomorphism(algebras: Sequence[Algebra], keys: Sequence | None = None,
                         budget: int = DEFAULT_BUDGET,
                         bucket_keys: Sequence | None = None) -> list[tuple[int, list[int]]]:
    """Partition indices into isomorphism classes.

    Members are visited in order of ``keys`` (default: list order), so each
    class representative is its member with the least key. ``bucket_keys``
    may carry extra invariants known by other means (the parent vertex, say);
    only algebras agreeing on them and on the fingerprint are compared.
    """
    order = sorted(range(len(algebras)), key=(lambda i: keys[i]) if keys is not None else None)
    buckets: dict[tuple, list[list[int]]] = {}
    classes: list[list[int]] = []
    for i in order:
        fp = algebras[i].fingerprint
        if bucket_keys is not None:
            fp = (bucket_keys[i], fp)
        bucket = buckets.setdefault(fp, [])
        for cls in bucket:
            if iso_algebras(algebras[cls[0]], algebras[i], budget) is not None:
                cls.append(i)
                break
        else:
            cls = [i]
            bucket.append(cls)
            classes.append(cls)
    return [(cls[0], cls) for cls in classes]
