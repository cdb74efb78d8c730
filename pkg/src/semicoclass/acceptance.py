"""End-to-end acceptance checks.

Each check returns a :class:`Result`; ``run`` executes a selection and the
``verify`` subcommand and the test-suite both go through it.  Checks never
adjust their thresholds to pass: a failure is reported with the evidence.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import algebra as alg
from . import graph as gr
from . import semigroup as sg
from .linalg import has_sqrt_minus_one, sqrt_minus_one

G1_PRIMES = (2, 3, 5, 7, 13)


@dataclass
class Result:
    number: int
    title: str
    passed: bool
    details: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.number}: {self.title} ({self.seconds:.1f}s)"


class _Checker:
    """Collects named boolean checks; a criterion passes iff all of them do."""

    def __init__(self):
        self.ok = True
        self.details: list[str] = []

    def check(self, cond: bool, what: str) -> bool:
        if not cond:
            self.ok = False
            self.details.append("failed: " + what)
        return cond

    def note(self, msg: str):
        self.details.append(msg)


# ---------------------------------------------------------------- helpers

def _vec(a: alg.Algebra, entries: dict[int, int]) -> np.ndarray:
    v = np.zeros(a.dim, dtype=np.int64)
    for i, c in entries.items():
        v[i] = c % a.p
    return v


def _u_power(n: int, e: int) -> dict[int, int]:
    """Basis position of u^e in a two-generator coclass-1 table (empty when zero)."""
    return {e - 1: 1} if 1 <= e <= n - 2 else {}


def _two_generator_words(n: int) -> list[list[int]]:
    # basis: u, u^2, ..., u^(n-2), v; generator 0 is u, 1 is v
    return [[0] * e for e in range(1, n - 1)] + [[1]]


def explicit_map(kind: str, n: int, k: int, p: int) -> tuple[alg.Algebra, alg.Algebra, np.ndarray]:
    """Source, target and matrix of one of the coclass-1 isomorphisms.

    ``H``: K H_2 -> K H_k with u -> u + u^(k-1), v -> u + v.
    ``J``: K J_(n-1) -> K J_k with u -> u, v -> v - u^(k-1).
    ``X``: K X -> K J_(n-1) with u -> u, v -> u^(n/2-1) - sqrt(-1) v.
    """
    if kind == "H":
        src, dst = sg.H(n, 2), sg.H(n, k)
        u = {**_u_power(n, 1)}
        for i, c in _u_power(n, k - 1).items():
            u[i] = u.get(i, 0) + c
        v = {**_u_power(n, 1), n - 2: 1}
    elif kind == "J":
        src, dst = sg.J(n, n - 1), sg.J(n, k)
        u = _u_power(n, 1)
        v = {n - 2: 1, **{i: -c for i, c in _u_power(n, k - 1).items()}}
    elif kind == "X":
        src, dst = sg.X(n), sg.J(n, n - 1)
        u = _u_power(n, 1)
        v = {**_u_power(n, n // 2 - 1), n - 2: -sqrt_minus_one(p)}
    else:
        raise ValueError(kind)
    a, b = alg.contracted_algebra(src, p), alg.contracted_algebra(dst, p)
    m = alg.map_from_generators(a, b, _two_generator_words(n), [_vec(b, u), _vec(b, v)])
    return a, b, m


def explicit_pairs(n: int, p: int) -> list[tuple[str, int]]:
    pairs = [("H", k) for k in range(3, n)]
    pairs += [("J", k) for k in range(n // 2 + 1, n - 1)]
    if n % 2 == 0 and has_sqrt_minus_one(p):
        pairs.append(("X", n - 1))
    return pairs


def expected_g1_labels(n: int, p: int) -> list[tuple[bool, int]]:
    """(commutative, label) of the coclass-1 classes of order n >= 5, sorted."""
    split = n % 2 == 0 and not has_sqrt_minus_one(p)
    out = [(True, n - 2), (True, n // 2 - int(split)), (False, 2), (False, 2)]
    if split:
        out.append((True, 1))
    return sorted(out)


def _mainline_vertex(g: gr.CoclassGraph, i: int, c: int) -> str | None:
    return g.vertex_of_semigroup(sg.semigroup_id(sg.cc2_mainline(i, c)))


def tree_layout(g: gr.CoclassGraph, horizon: int | None, reach: int | None = None):
    """Roots of the maximal trees and the dimensions of vertices outside them."""
    trees = gr.maximal_trees(g, horizon, reach)
    inside: set[str] = set()
    for t in trees:
        inside |= set(gr.coclass_tree(g, t)._index)
    outside = sorted({v.dim for v in g.vertices if v.id not in inside})
    return trees, outside


# ---------------------------------------------------------------- criteria

def criterion_1() -> _Checker:
    c = _Checker()
    levels = sg.census(0, 1, 10)
    for n in range(2, 11):
        c.check(len(levels.get(n, [])) == 1, f"one coclass-0 semigroup of order {n}")
    for p in (2, 3, 5):
        g = gr.build_graph(0, p, 1, 10, levels=levels)
        c.check(len(gr.roots(g)) == 1, f"p={p}: single root")
        c.check(all(len(g.children(v.id)) <= 1 for v in g.vertices), f"p={p}: graph is a path")
        c.check(all(v.label == 1 for v in g.vertices), f"p={p}: all labels 1")
        reports = gr.analyze(g)
        ok = (len(reports) == 1 and isinstance(reports[0], gr.PeriodicityReport)
              and (reports[0].defect, reports[0].period) == (1, 1) and reports[0].strong
              and all(f.coefficients == [1] for f in reports[0].families))
        c.check(ok, f"p={p}: analyzer gives defect 1, period 1, constant family 1")
    return c


def criterion_2() -> _Checker:
    c = _Checker()
    levels = sg.census(1, 2, 9)
    expected = {3: 1, 4: 9, **{n: n + 2 + n // 2 for n in range(5, 10)}}
    got = {n: len(levels.get(n, [])) for n in expected}
    c.check(got == expected, f"coclass-1 counts {got} == {expected}")
    for n in range(5, 10):
        fam = {sg.canonical_encoding(t) for t in sg.coclass_one_family(n)}
        c.check(fam == {sg.canonical_encoding(t) for t in levels[n]},
                f"order {n}: census equals the classification list")
    return c


def criterion_3(primes=G1_PRIMES) -> _Checker:
    c = _Checker()
    levels = sg.census(1, 2, 10)
    for p in primes:
        g = gr.build_graph(1, p, 2, 10, levels=levels)
        for n in range(5, 11):
            want = 4 if (has_sqrt_minus_one(p) or n % 2) else 5
            got = len(g.level(n - 1))
            c.check(got == want, f"p={p}, order {n}: {got} classes, expected {want}")
    return c


def criterion_4(primes=G1_PRIMES, orders=range(5, 13)) -> _Checker:
    c = _Checker()
    for p in primes:
        for n in orders:
            for kind, k in explicit_pairs(n, p):
                a, b, m = explicit_map(kind, n, k, p)
                c.check(alg.AlgebraIso(m).validates(a, b), f"p={p} n={n}: explicit {kind} map to k={k}")
                w = alg.iso_algebras(a, b)
                c.check(w is not None and w.validates(a, b),
                        f"p={p} n={n}: search finds {kind} witness for k={k}")
            pairs = [(sg.H(n, n - 1), sg.J(n, n - 1), "H_(n-1) vs J_(n-1)"),
                     (sg.N1(n), sg.N3(n), "N1 vs N3")]
            for s, t, what in pairs:
                a, b = alg.contracted_algebra(s, p), alg.contracted_algebra(t, p)
                c.check(alg.iso_algebras(a, b) is None, f"p={p} n={n}: {what} non-isomorphic")
    return c


def _g1_labels_ok(c: _Checker, g: gr.CoclassGraph, p: int):
    alive = gr.alive_vertices(g)
    for n in range(5, g.max_dim + 2):
        level = g.level(n - 1)
        got = sorted((v.commutative, v.label) for v in level)
        c.check(got == expected_g1_labels(n, p), f"p={p}, order {n}: labels {got}")
        on_path = [v for v in level if v.id in alive]
        if n - 1 < g.max_dim:
            c.check(len(on_path) == 1 and on_path[0].label == n - 2,
                    f"p={p}, order {n}: alive vertex is the H-class with label {n - 2}")


def criterion_5(primes=(3, 5)) -> _Checker:
    c = _Checker()
    levels = sg.census(1, 2, 12)
    z3 = sg.semigroup_id(sg.zero_semigroup(3))
    for p in primes:
        g = gr.build_graph(1, p, 2, 12, levels=levels)
        rs = gr.roots(g)
        c.check(len(rs) == 1 and z3 in g[rs[0]].members, f"p={p}: unique root K Z_3")
        alive = gr.alive_vertices(g)
        trees = gr.maximal_trees(g)
        c.check(len(trees) == 1, f"p={p}: one maximal tree, got {trees}")
        if trees:
            path = gr.alive_path(g, trees[0])
            c.check(set(path) == alive, f"p={p}: alive vertices form a single path")
        _g1_labels_ok(c, g, p)
        reports = gr.analyze(g)
        rep = reports[0] if reports else None
        ok = isinstance(rep, gr.PeriodicityReport) and rep.strong and (rep.defect, rep.period) == (2, 2)
        c.check(ok, f"p={p}: analyzer reports (l,k) = (2,2), got "
                    f"{(rep.defect, rep.period, rep.strong) if isinstance(rep, gr.PeriodicityReport) else rep}")
        if ok:
            slopes = sorted(f.coefficients[1] if f.degree == 1 else 0 for f in rep.families)
            consts = sorted(f.coefficients[0] for f in rep.families if f.degree == 0)
            c.check(all(f.degree <= 1 for f in rep.families), f"p={p}: families at most linear")
            c.check(slopes.count(2) == 2 and slopes.count(1) >= 1,
                    f"p={p}: two slope-2 families and a slope-1 family, got {slopes}")
            want = [1, 2] if not has_sqrt_minus_one(p) else [2]
            c.check(sorted(set(consts)) == want, f"p={p}: constant families {consts}")
            c.note(f"p={p}: families " + ", ".join(str(f) for f in rep.families))
    return c


def criterion_6(max_order: int = 9, primes=(3, 5, 7, 13), workers: int = 1) -> _Checker:
    c = _Checker()
    levels = sg.census(2, 2, max_order, workers=workers)
    graphs = {p: gr.build_graph(2, p, 2, max_order, levels=levels, workers=workers) for p in primes}
    for a, b in ((5, 13), (3, 7)):
        if a in graphs and b in graphs:
            same = gr.level_codes(graphs[a]) == gr.level_codes(graphs[b])
            if not same:
                sizes = {p: [len(graphs[p].level(d)) for d in graphs[p].dims()] for p in (a, b)}
                c.note(f"vertices per dimension: {sizes}")
            c.check(same, f"p={a} and p={b} have identical level codes and labels")
    for p, g in graphs.items():
        top = g.max_dim
        horizon = top - 1
        plain_alive = gr.alive_vertices(g, top)
        for cl in range(2, top - 2):          # dimensions 4 .. top - 1
            vids = [_mainline_vertex(g, i, cl) for i in range(1, 6)]
            c.check(all(v in plain_alive for v in vids), f"p={p}: main lines alive at dim {cl + 2}: {vids}")
            c.check(len(set(vids)) == 5, f"p={p}: main lines pairwise non-isomorphic at dim {cl + 2}")
        trees, outside = tree_layout(g, horizon, top)
        c.check(all(g[t].dim == 4 for t in trees), f"p={p}: tree roots {trees} at dimension 4")
        c.check(set(outside) <= {4, 5}, f"p={p}: vertices outside the trees have dims {outside}")
        plain, plain_out = tree_layout(g, top)
        c.note(f"p={p}: horizon {horizon} looking to {top}: roots {trees}; "
               f"plain horizon {top}: roots {plain}, outside dims {plain_out}")
    return c


def criterion_7(max_order: int = 9) -> _Checker:
    c = _Checker()
    for r in (1, 2):
        levels = sg.census(r, r + 1, max_order)
        for p in (2, 3):
            g = gr.build_graph(r, p, r + 1, max_order, levels=levels)
            rs = gr.roots(g)
            zr = sg.semigroup_id(sg.zero_semigroup(r + 2))
            c.check(len(rs) == 1 and zr in g[rs[0]].members, f"r={r} p={p}: single root K Z_{r + 2}")
            if len(rs) != 1:
                continue
            try:
                path = gr.alive_path(g, rs[0])
            except gr.NoAlivePath as exc:
                c.check(False, f"r={r} p={p}: alive path ({exc})")
                continue
            c.check([g[v].dim for v in path] == list(range(r + 1, g.max_dim)),
                    f"r={r} p={p}: alive path spans every dimension below the horizon")
            for vid in path:
                cl = g[vid].dim - r
                want = g.vertex_of_semigroup(sg.semigroup_id(sg.mkr_truncation(r, cl)))
                c.check(want == vid, f"r={r} p={p}: alive vertex {vid} is the class-{cl} truncation")
    return c


def criterion_8(primes=(2, 3), max_dim: int = 4) -> _Checker:
    c = _Checker()
    for r in (1, 2):
        pipe: dict[int, set] = {}
        for d in range(1, r + 2):
            for n, ts in sg.census(r, d, 6, seed_order=2 * r + 1).items():
                pipe.setdefault(n, set()).update(sg.canonical_encoding(t) for t in ts)
        for n in range(1, 7):
            bf = {sg.canonical_encoding(t) for t in sg.brute_force_census(n, r)}
            c.check(bf == pipe.get(n, set()),
                    f"coclass {r}, order {n}: brute force {len(bf)} vs pipeline {len(pipe.get(n, ()))}")
    tables = [t for n in range(2, max_dim + 2) for r in range(n - 1)
              for t in sg.brute_force_census(n, r)]
    for p in primes:
        algebras = [alg.contracted_algebra(t, p) for t in tables]
        compared = 0
        for i, j in itertools.combinations_with_replacement(range(len(algebras)), 2):
            a, b = algebras[i], algebras[j]
            if a.dim != b.dim:
                continue
            # over GF(3) the exhaustive search is slow at dim 4; pairs told
            # apart by the invariant fingerprint are skipped there
            if p > 2 and a.dim == max_dim and a.fingerprint != b.fingerprint:
                continue
            compared += 1
            fast = alg.iso_algebras(a, b)
            slow = alg.brute_force_iso(a, b)
            c.check((fast is None) == (slow is None),
                    f"p={p}: tables {i} and {j}: search and exhaustive search disagree")
            if fast is not None:
                c.check(fast.validates(a, b), f"p={p}: witness for tables {i}, {j} validates")
        c.note(f"p={p}: {compared} pairs compared against the exhaustive search")
    return c


def check_graph_invariants(c: _Checker, g: gr.CoclassGraph, levels: dict[int, list], budget=alg.DEFAULT_BUDGET):
    p = g.params["p"]
    for a, b in g.edges():
        c.check(g[b].dim - g[a].dim == 1, f"edge {a} -> {b} drops one dimension")
    for n, ts in levels.items():
        if n < 2 and g.params["r"] > 0:
            continue
        total = sum(v.label for v in g.level(n - 1))
        c.check(total == len(ts), f"p={p}: labels at dim {n - 1} sum to {len(ts)}, got {total}")
    tables = {sg.semigroup_id(t): t for ts in levels.values() for t in ts}
    for v in g.vertices:
        for m in v.members[1:]:
            w = alg.iso_algebras(alg.contracted_algebra(tables[m], p), v.algebra, budget)
            c.check(w is not None and w.validates(alg.contracted_algebra(tables[m], p), v.algebra),
                    f"p={p}: member {m[:8]} of {v.id} has a validating witness")


def criterion_9() -> _Checker:
    c = _Checker()
    runs = [(0, 1, 8, (2, 3)), (1, 2, 10, (2, 3, 5)), (2, 2, 7, (3, 5)), (2, 3, 6, (3,))]
    for r, d, order, primes in runs:
        levels = sg.census(r, d, order)
        for n, ts in levels.items():
            for t in ts:
                for p in primes[:1]:
                    a = alg.contracted_algebra(t, p)
                    c.check(a.nilpotency_class == sg.nilpotency_class(t) and a.coclass == sg.coclass(t),
                            f"r={r} order {n}: class/coclass preserved for {sg.semigroup_id(t)[:8]}")
        for p in primes:
            g = gr.build_graph(r, p, d, order, levels=levels)
            check_graph_invariants(c, g, levels)
    return c


CRITERIA: dict[int, tuple[str, Callable[[], _Checker]]] = {
    1: ("coclass 0: census and path graph", criterion_1),
    2: ("coclass 1: census counts", criterion_2),
    3: ("coclass 1: algebra classes per dimension", criterion_3),
    4: ("coclass 1: explicit isomorphisms and non-isomorphisms", criterion_4),
    5: ("G(1,p,2) structure and periodicity (2,2)", criterion_5),
    6: ("G(2,p,2) desk build: p-dependence, main lines, tree roots", criterion_6),
    7: ("G(r,p,r+1) is a single tree along the truncations", criterion_7),
    8: ("oracle equivalences", criterion_8),
    9: ("invariants", criterion_9),
}


def run_criterion(number: int) -> Result:
    title, fn = CRITERIA[number]
    t0 = time.perf_counter()
    try:
        c = fn()
        passed, details = c.ok, c.details
    except Exception as exc:          # a crash is a failure, not a pass
        passed, details = False, [f"raised {type(exc).__name__}: {exc}"]
    return Result(number, title, passed, details, time.perf_counter() - t0)


def run(numbers=None, report: Callable[[str], None] | None = None) -> list[Result]:
    out = []
    for k in numbers or sorted(CRITERIA):
        res = run_criterion(k)
        if report:
            report(res.line())
            for d in res.details:
                report("    " + d)
        out.append(res)
    return out
