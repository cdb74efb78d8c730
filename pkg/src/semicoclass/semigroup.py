"""Finite nilpotent semigroups with zero, stored as multiplication tables.

Element ``0`` is always the zero element.  Tables are tuples of tuples so that
they hash and compare cheaply.
"""
from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

ZERO = 0


class NotNilpotent(ValueError):
    pass


class NotAnIdeal(ValueError):
    pass


class BadParameter(ValueError):
    pass


@dataclass(frozen=True)
class SemigroupTable:
    table: tuple[tuple[int, ...], ...]
    origin: str = ""

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def zero(self) -> int:
        return ZERO

    def __call__(self, a: int, b: int) -> int:
        return self.table[a][b]

    def array(self) -> np.ndarray:
        return np.array(self.table, dtype=np.int64).reshape(self.order, self.order)

    def transpose(self) -> "SemigroupTable":
        n = self.order
        return SemigroupTable(tuple(tuple(self.table[b][a] for b in range(n)) for a in range(n)),
                              origin=f"dual({self.origin})" if self.origin else "")

    def flat(self) -> tuple[int, ...]:
        return tuple(itertools.chain.from_iterable(self.table))

    def __eq__(self, other):
        return isinstance(other, SemigroupTable) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        name = f" {self.origin}" if self.origin else ""
        return f"<SemigroupTable{name} order={self.order}>"


def from_rows(rows: Sequence[Sequence[int]], origin: str = "") -> SemigroupTable:
    table = tuple(tuple(int(x) for x in row) for row in rows)
    n = len(table)
    if any(len(row) != n for row in table):
        raise ValueError("table must be square")
    if any(not 0 <= x < n for row in table for x in row):
        raise ValueError("table entry out of range")
    if any(x != ZERO for x in table[ZERO]) or any(row[ZERO] != ZERO for row in table):
        raise ValueError("element 0 must be absorbing")
    return SemigroupTable(table, origin)


def from_flat(n: int, flat: Sequence[int], origin: str = "") -> SemigroupTable:
    return from_rows([flat[i * n:(i + 1) * n] for i in range(n)], origin)


def check_associative(t: SemigroupTable) -> bool:
    m = t.array()
    # (ab)c == a(bc) for all triples at once
    left = m[m, :]            # left[a, b, c] = (ab)c
    right = m[:, m]           # right[a, b, c] = a(bc)
    return bool(np.array_equal(left, right))


def failing_triple(t: SemigroupTable):
    n = t.order
    for a, b, c in itertools.product(range(n), repeat=3):
        if t(t(a, b), c) != t(a, t(b, c)):
            return a, b, c
    return None


# ---------------------------------------------------------------- structure

def power_chain(t: SemigroupTable) -> list[frozenset[int]]:
    """``[S, S^2, ..., S^(c+1) = {0}]``; raises NotNilpotent if it stalls."""
    n = t.order
    everything = frozenset(range(n))
    chain = [everything]
    while len(chain[-1]) > 1:
        prev = chain[-1]
        nxt = frozenset(t.table[a][b] for a in range(n) for b in prev)
        if nxt == prev:
            raise NotNilpotent(f"power chain stabilises at {len(prev)} elements")
        chain.append(nxt)
    return chain


def nilpotency_class(t: SemigroupTable) -> int:
    return len(power_chain(t)) - 1


def coclass(t: SemigroupTable) -> int:
    return (t.order - 1) - nilpotency_class(t)


def minimal_generators(t: SemigroupTable) -> list[int]:
    n = t.order
    squares = {t.table[a][b] for a in range(n) for b in range(n)}
    return [x for x in range(1, n) if x not in squares]


def generated_closure(t: SemigroupTable, gens: Iterable[int]) -> set[int]:
    found = set(gens) | {ZERO}
    frontier = list(found)
    while frontier:
        new = []
        for a in frontier:
            for b in list(found):
                for c in (t.table[a][b], t.table[b][a]):
                    if c not in found:
                        found.add(c)
                        new.append(c)
        frontier = new
    return found


def layers(t: SemigroupTable) -> list[int]:
    """For every element, the largest i with x in S^i (zero gets c+1)."""
    chain = power_chain(t)
    depth = [0] * t.order
    for i, level in enumerate(chain, start=1):
        for x in level:
            depth[x] = i
    return depth


def rees_quotient(t: SemigroupTable, ideal: Iterable[int]) -> SemigroupTable:
    ideal = set(ideal) | {ZERO}
    n = t.order
    for x in ideal:
        for a in range(n):
            if t.table[a][x] not in ideal or t.table[x][a] not in ideal:
                raise NotAnIdeal(f"{sorted(ideal)} is not closed under multiplication")
    keep = [ZERO] + [x for x in range(n) if x not in ideal]
    index = {x: i for i, x in enumerate(keep)}
    rows = []
    for a in keep:
        rows.append(tuple(index.get(t.table[a][b], ZERO) if t.table[a][b] not in ideal else ZERO
                          for b in keep))
    return SemigroupTable(tuple(rows), origin=t.origin)


def top_quotient(t: SemigroupTable) -> SemigroupTable:
    """Quotient by S^c, c the class: the parent in the coclass graph."""
    chain = power_chain(t)
    return rees_quotient(t, chain[-2])


# ---------------------------------------------------------------- isomorphism

@dataclass(frozen=True)
class SemigroupIso:
    """``bijection[x]`` is the image of element ``x``."""

    bijection: tuple[int, ...]

    def validates(self, s: SemigroupTable, t: SemigroupTable) -> bool:
        f = self.bijection
        n = s.order
        if t.order != n or f[ZERO] != ZERO or sorted(f) != list(range(n)):
            return False
        return all(f[s.table[a][b]] == t.table[f[a]][f[b]] for a in range(n) for b in range(n))

    def inverse(self) -> "SemigroupIso":
        inv = [0] * len(self.bijection)
        for a, b in enumerate(self.bijection):
            inv[b] = a
        return SemigroupIso(tuple(inv))

    def then(self, other: "SemigroupIso") -> "SemigroupIso":
        return SemigroupIso(tuple(other.bijection[x] for x in self.bijection))


def element_profiles(t: SemigroupTable) -> list[tuple]:
    """Isomorphism-invariant per-element data used to prune searches."""
    n = t.order
    depth = layers(t)
    out = []
    for x in range(n):
        k, y = 1, x
        while y != ZERO:
            y = t.table[y][x]
            k += 1
        left = len({t.table[x][a] for a in range(n)})
        right = len({t.table[a][x] for a in range(n)})
        out.append((depth[x], k if x else 0, left, right))
    return out


def iso_semigroups(s: SemigroupTable, t: SemigroupTable) -> SemigroupIso | None:
    """Backtracking search for a zero-fixing isomorphism ``s -> t``.

    A map is fixed by the images of the minimal generators, so the search
    assigns generator images one at a time and propagates products.
    """
    n = s.order
    if t.order != n:
        return None
    try:
        ps, pt = element_profiles(s), element_profiles(t)
    except NotNilpotent:
        return None
    if sorted(ps) != sorted(pt):
        return None
    gens_s = minimal_generators(s)
    gens_t = minimal_generators(t)
    cands = [[h for h in gens_t if pt[h] == ps[g]] for g in gens_s]
    st, tt = s.table, t.table

    def propagate(phi: dict[int, int], used: set[int], assigned: list[int]) -> bool:
        frontier = list(phi)
        while frontier:
            new = []
            for a in frontier:
                for g in assigned:
                    for x, y in ((st[a][g], tt[phi[a]][phi[g]]), (st[g][a], tt[phi[g]][phi[a]])):
                        if x in phi:
                            if phi[x] != y:
                                return False
                        else:
                            if y in used or ps[x] != pt[y]:
                                return False
                            phi[x] = y
                            used.add(y)
                            new.append(x)
            frontier = new
        return True

    def search(i: int, phi: dict[int, int], used: set[int]):
        if i == len(gens_s):
            f = tuple(phi[x] for x in range(n))
            iso = SemigroupIso(f)
            return iso if iso.validates(s, t) else None
        g = gens_s[i]
        for h in cands[i]:
            if h in used:
                continue
            phi2, used2 = dict(phi), set(used)
            phi2[g] = h
            used2.add(h)
            if propagate(phi2, used2, gens_s[: i + 1]):
                found = search(i + 1, phi2, used2)
                if found:
                    return found
        return None

    return search(0, {ZERO: ZERO}, {ZERO})


def anti_isomorphic(s: SemigroupTable, t: SemigroupTable) -> SemigroupIso | None:
    return iso_semigroups(s.transpose(), t)


# ---------------------------------------------------------------- canonical form

def _word_order(t: SemigroupTable, gens: Sequence[int]) -> list[int] | None:
    """Nonzero elements sorted by shortlex-least word in ``gens``."""
    order = list(gens)
    seen = set(gens) | {ZERO}
    level = list(gens)
    while level:
        nxt = []
        for w in level:
            row = t.table[w]
            for g in gens:
                e = row[g]
                if e not in seen:
                    seen.add(e)
                    nxt.append(e)
        order.extend(nxt)
        level = nxt
    return order if len(order) == t.order - 1 else None


def _relabelled(t: SemigroupTable, order: Sequence[int]) -> tuple[int, ...]:
    label = [0] * t.order
    for i, x in enumerate(order, start=1):
        label[x] = i
    old = [ZERO] + list(order)
    return tuple(label[t.table[a][b]] for a in old for b in old)


def canonical_form(t: SemigroupTable) -> SemigroupTable:
    """Canonical representative of the isomorphism class of ``t``.

    Candidate labelings are those induced by orderings of the minimal
    generators (sorted into blocks of equal profile); each ordering labels
    elements by their shortlex-least generator word.  This candidate set is
    transported by isomorphisms, so the least encoding is an invariant.
    """
    prof = element_profiles(t)
    gens = minimal_generators(t)
    blocks: dict[tuple, list[int]] = {}
    for g in gens:
        blocks.setdefault(prof[g], []).append(g)
    keys = sorted(blocks)
    best = None
    for choice in itertools.product(*(itertools.permutations(blocks[k]) for k in keys)):
        order = _word_order(t, [g for part in choice for g in part])
        if order is None:
            raise NotNilpotent("minimal generators do not generate")
        enc = _relabelled(t, order)
        if best is None or enc < best:
            best = enc
    if best is None:   # one-element semigroup
        best = (0,)
    return from_flat(t.order, best, origin=t.origin)


def canonical_encoding(t: SemigroupTable) -> tuple[int, ...]:
    return canonical_form(t).flat()


def encoding_id(encoding: Sequence[int]) -> str:
    return hashlib.sha256(bytes(encoding)).hexdigest()


def semigroup_id(t: SemigroupTable) -> str:
    return encoding_id(canonical_encoding(t))


# ---------------------------------------------------------------- descendants

class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def extension_components(t: SemigroupTable) -> tuple[list[list[tuple[int, int]]], int]:
    """Free blocks of zero products that may be redirected to a new element.

    A new annihilating element ``x`` is added and every product ``ab = 0`` of
    nonzero elements is either kept or sent to ``x``.  Associativity forces
    equalities between these choices (and forces some to stay zero); the
    remaining choices fall into blocks that must be switched together.
    Returns the free blocks and the class of ``t``.
    """
    n = t.order
    tab = t.table
    pairs = [(a, b) for a in range(1, n) for b in range(1, n) if tab[a][b] == ZERO]
    var = {pr: i + 1 for i, pr in enumerate(pairs)}   # node 0 means "forced zero"
    uf = _UnionFind(len(pairs) + 1)
    for a in range(1, n):
        for b in range(1, n):
            ab = tab[a][b]
            for c in range(1, n):
                bc = tab[b][c]
                if tab[ab][c] != ZERO:
                    continue
                left = var[(ab, c)] if ab != ZERO else 0
                right = var[(a, bc)] if bc != ZERO else 0
                uf.union(left, right)
    blocks: dict[int, list[tuple[int, int]]] = {}
    for pr, v in var.items():
        root = uf.find(v)
        if root != uf.find(0):
            blocks.setdefault(root, []).append(pr)
    chain = power_chain(t)
    return [blocks[k] for k in sorted(blocks)], len(chain) - 1


def descendants(t: SemigroupTable, r: int | None = None) -> list[SemigroupTable]:
    """All one-element extensions ``T`` with ``T/T^(c+1) = t``, up to isomorphism.

    ``T`` has class ``c+1`` and the same coclass and generator number as ``t``.
    """
    if r is not None and coclass(t) != r:
        raise BadParameter(f"input has coclass {coclass(t)}, not {r}")
    n = t.order
    blocks, c = extension_components(t)
    top = power_chain(t)[c - 1] - {ZERO} if c >= 1 else frozenset()
    reaches_top = [any(b in top for _, b in blk) for blk in blocks]
    x = n
    found: dict[tuple[int, ...], SemigroupTable] = {}
    base = [list(row) + [ZERO] for row in t.table] + [[ZERO] * (n + 1)]
    parent_id = semigroup_id(t) if n <= 64 else ""
    for mask in range(1 << len(blocks)):
        chosen = [i for i in range(len(blocks)) if mask >> i & 1]
        if c >= 1 and not any(reaches_top[i] for i in chosen):
            continue
        rows = [row[:] for row in base]
        for i in chosen:
            for a, b in blocks[i]:
                rows[a][b] = x
        cand = SemigroupTable(tuple(tuple(row) for row in rows), origin=parent_id)
        enc = canonical_encoding(cand)
        if enc not in found:
            found[enc] = from_flat(n + 1, enc, origin=parent_id)
    return [found[k] for k in sorted(found)]


# ---------------------------------------------------------------- brute force

def _perm_min_encoding(tab: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Least row-major table over all zero-fixing relabelings (small n only)."""
    n = len(tab)
    best = None
    for perm in itertools.permutations(range(1, n)):
        old = (0,) + perm          # new label i  <-  old element old[i]
        label = [0] * n
        for i, x in enumerate(old):
            label[x] = i
        enc = tuple(label[tab[a][b]] for a in old for b in old)
        if best is None or enc < best:
            best = enc
    return best


def brute_force_census(n: int, r: int, d: int | None = None) -> list[SemigroupTable]:
    """Exhaustive search for nilpotent semigroups of order ``n`` and coclass ``r``.

    Every nilpotent semigroup has a labeling, sorted by power-chain depth,
    in which ``ab`` is zero or larger than both ``a`` and ``b``; all such
    tables with the generators labelled first are enumerated, filtered and
    reduced by a canonical form taken over every relabeling.
    """
    if n == 1:
        return [SemigroupTable(((0,),), "Z1")] if r == 0 and d in (None, 0) else []
    cls = n - 1 - r
    if cls < 1:
        return []
    ds = range(1, n) if d is None else [d]
    found: dict[tuple[int, ...], SemigroupTable] = {}
    for dd in ds:
        for tab in _upper_tables(n, dd):
            t = SemigroupTable(tab)
            if len(power_chain(t)) - 1 != cls:
                continue
            enc = _perm_min_encoding(tab)
            found.setdefault(enc, from_flat(n, enc, origin="census"))
    return [found[k] for k in sorted(found)]


def _upper_tables(n: int, d: int):
    """Associative tables on 1..n-1 with generators 1..d and ab > max(a, b)."""
    cells = sorted(((a, b) for a in range(1, n) for b in range(1, n)),
                   key=lambda ab: (-max(ab), ab))
    options = {(a, b): [0] + [m for m in range(max(a, b, d) + 1, n)] for a, b in cells}
    position = {cell: i for i, cell in enumerate(cells)}
    # triples (a, b, c) become checkable once both (a, b) and (b, c) are set
    checks: list[list[tuple[int, int, int]]] = [[] for _ in cells]
    for a, b, c in itertools.product(range(1, n), repeat=3):
        i = max(position[(a, b)], position[(b, c)])
        checks[i].append((a, b, c))
    tab = [[0] * n for _ in range(n)]

    def assoc_ok(i: int) -> bool:
        for a, b, c in checks[i]:
            if tab[tab[a][b]][c] != tab[a][tab[b][c]]:
                return False
        return True

    def rec(i: int):
        if i == len(cells):
            produced = {tab[a][b] for a in range(1, n) for b in range(1, n)}
            if all(m in produced for m in range(d + 1, n)):
                yield tuple(tuple(row) for row in tab)
            return
        a, b = cells[i]
        for v in options[(a, b)]:
            tab[a][b] = v
            if assoc_ok(i):
                yield from rec(i + 1)
        tab[a][b] = 0

    yield from rec(0)


# ---------------------------------------------------------------- census pipeline

SEED_ORDER = 6


def census(r: int, d: int, max_order: int, seed_order: int | None = None,
           workers: int = 1, log: Callable[[str], None] | None = None) -> dict[int, list[SemigroupTable]]:
    """Semigroups of coclass ``r`` with ``d`` generators, by order, up to ``max_order``.

    Orders up to ``seed_order`` (default ``min(2r+2, 6)``) come from the
    exhaustive search, larger ones as descendants of the previous order.
    Every order above ``2r+1`` is reached this way since roots of coclass
    ``r`` have at most ``2r+1`` elements.  For ``r = 0`` the one-element
    semigroup is included as order 1.  Lists are sorted by canonical encoding.
    """
    if r < 0 or d < 0 or max_order < 1:
        raise BadParameter("need r >= 0, d >= 0 and max_order >= 1")
    seed = min(2 * r + 2, SEED_ORDER) if seed_order is None else seed_order
    levels: dict[int, list[SemigroupTable]] = {}
    if d > r + 1:
        # at most r+1 generators in coclass r
        return {n: [] for n in range(1, max_order + 1)}
    for n in range(1, max_order + 1):
        if n == 1:
            found = brute_force_census(1, 0, 0) if r == 0 else []
        elif n <= seed:
            found = brute_force_census(n, r, d)
        else:
            found = _extend(levels[n - 1], workers)
        found.sort(key=canonical_encoding)
        levels[n] = found
        if log:
            log(f"census r={r} d={d}: order {n}: {len(found)} semigroups")
    return levels


def _extend(parents: list[SemigroupTable], workers: int) -> list[SemigroupTable]:
    if workers > 1 and len(parents) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(workers) as pool:
            kids = list(pool.map(descendants, parents, chunksize=4))
    else:
        kids = [descendants(t) for t in parents]
    return [x for batch in kids for x in batch]


# ---------------------------------------------------------------- constructors

def from_normal_forms(names: Sequence[Hashable], mul: Callable[[Hashable, Hashable], Hashable | None],
                      origin: str = "") -> SemigroupTable:
    """Table on ``[zero] + names`` where ``mul`` returns a name or None for zero."""
    index = {x: i + 1 for i, x in enumerate(names)}
    rows = [(0,) * (len(names) + 1)]
    for x in names:
        rows.append((0,) + tuple(0 if (z := mul(x, y)) is None else index[z] for y in names))
    return SemigroupTable(tuple(rows), origin)


def zero_semigroup(n: int) -> SemigroupTable:
    if n < 1:
        raise BadParameter("order must be positive")
    return SemigroupTable(tuple((0,) * n for _ in range(n)), f"Z{n}")


def monogenic(n: int) -> SemigroupTable:
    """``<u | u^n = u^(n+1)>``: nonzero elements u, ..., u^(n-1)."""
    if n < 1:
        raise BadParameter("order must be positive")
    return from_normal_forms(list(range(1, n)),
                             lambda i, j: i + j if i + j <= n - 1 else None, f"monogenic({n})")


def _two_generator(n: int, uv: int, vu: int, vv: int, origin: str) -> SemigroupTable:
    """Coclass-1 table on u, ..., u^(n-2), v with u^(n-1) = 0.

    ``uv``, ``vu`` and ``vv`` are exponents of the power of u each product
    equals; exponents >= n - 1 mean zero.
    """
    top = n - 2

    def power(e: int):
        return e if e <= top else None

    def mul(x, y):
        if x == "v" and y == "v":
            return power(vv)
        if x == "v":
            return power(vu + y - 1)
        if y == "v":
            return power(x - 1 + uv)
        return power(x + y)

    return from_normal_forms(list(range(1, top + 1)) + ["v"], mul, origin)


def H(n: int, k: int) -> SemigroupTable:
    if n < 4 or not 2 <= k <= n - 1:
        raise BadParameter(f"H needs n >= 4 and 2 <= k <= n-1, got n={n}, k={k}")
    return _two_generator(n, k, k, 2 * k - 2, f"H({n},{k})")


def J(n: int, k: int) -> SemigroupTable:
    if n < 5 or not (n / 2 < k <= n - 1):
        raise BadParameter(f"J needs n >= 5 and n/2 < k <= n-1, got n={n}, k={k}")
    return _two_generator(n, k, k, n - 2, f"J({n},{k})")


def X(n: int) -> SemigroupTable:
    if n < 5 or n % 2:
        raise BadParameter(f"X needs even n >= 6, got {n}")
    return _two_generator(n, n // 2, n // 2, n - 1, f"X({n})")


def _check_n(n: int, name: str):
    if n < 5:
        raise BadParameter(f"{name} needs n >= 5, got {n}")


def N1(n: int) -> SemigroupTable:
    _check_n(n, "N1")
    return _two_generator(n, n - 1, n - 2, n - 2, f"N1({n})")


def N2(n: int) -> SemigroupTable:
    _check_n(n, "N2")
    return _two_generator(n, n - 2, n - 1, n - 2, f"N2({n})")


def N3(n: int) -> SemigroupTable:
    _check_n(n, "N3")
    return _two_generator(n, n - 1, n - 2, n - 1, f"N3({n})")


def N4(n: int) -> SemigroupTable:
    _check_n(n, "N4")
    return _two_generator(n, n - 2, n - 1, n - 1, f"N4({n})")


def coclass_one_family(n: int) -> list[SemigroupTable]:
    """The n + 2 + floor(n/2) coclass-1 semigroups of order n >= 5."""
    out = [H(n, k) for k in range(2, n)]
    out += [J(n, k) for k in range(n // 2 + 1, n)]
    if n % 2 == 0:
        out.append(X(n))
    out += [N1(n), N2(n), N3(n), N4(n)]
    return out


def zero_union(a: SemigroupTable, b: SemigroupTable) -> SemigroupTable:
    """Disjoint union with the zeros identified; mixed products are zero."""
    na = a.order - 1
    names = [("a", x) for x in range(1, a.order)] + [("b", x) for x in range(1, b.order)]

    def mul(x, y):
        if x[0] != y[0]:
            return None
        src = a if x[0] == "a" else b
        z = src.table[x[1]][y[1]]
        return None if z == ZERO else (x[0], z)

    del na
    return from_normal_forms(names, mul, f"zero_union({a.origin},{b.origin})")


def mkr_truncation(r: int, c: int) -> SemigroupTable:
    """Class-c truncation of the zero union of (N, +) and Z_(r+1)."""
    if r < 0 or c < 1:
        raise BadParameter("need r >= 0 and c >= 1")
    t = zero_union(monogenic(c + 1), zero_semigroup(r + 1))
    return SemigroupTable(t.table, f"M({r},{c})")


_MAINLINE = {
    # which of ab, ba, bb equal the extra annihilator element x
    1: {("a", "b")},
    2: {("b", "a")},
    3: {("b", "b")},
    4: {("a", "b"), ("b", "a")},
    5: {("b", "b"), ("b", "a")},
}


def cc2_mainline(i: int, c: int) -> SemigroupTable:
    """Class-c truncation of the i-th two-generator coclass-2 main line.

    Nonzero elements are a, ..., a^c, b and one annihilating element x of
    degree 2 (ab, ba, b^2, ab = ba, or b^2 = ba for i = 1..5).
    """
    if i not in _MAINLINE or c < 2:
        raise BadParameter("need 1 <= i <= 5 and c >= 2")
    hits = _MAINLINE[i]

    def mul(x, y):
        if x == "x" or y == "x":
            return None
        if isinstance(x, int) and isinstance(y, int):
            return x + y if x + y <= c else None
        key = ("a" if x == 1 else x if x == "b" else None, "a" if y == 1 else y if y == "b" else None)
        return "x" if key in hits else None

    return from_normal_forms(list(range(1, c + 1)) + ["b", "x"], mul, f"mainline{i}({c})")


# ---------------------------------------------------------------- file format

def census_record(t: SemigroupTable) -> dict:
    enc = canonical_encoding(t)
    return {"order": t.order, "zero": ZERO, "table": list(enc),
            "id": encoding_id(enc), "origin": t.origin}


def table_from_record(rec: dict) -> SemigroupTable:
    if rec.get("zero", 0) != ZERO:
        raise ValueError("only zero = 0 is supported")
    return from_flat(rec["order"], rec["table"], origin=rec.get("origin", ""))
