"""Coclass graphs of contracted semigroup algebras and their periodicity.

A vertex is an isomorphism class of algebras ``KS`` for semigroups ``S`` of a
fixed coclass and generator number; it carries the number of semigroup types
realising it as its label.  The edge into ``B`` comes from its quotient by the
last nonzero power ``B/B^c``.
"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import algebra as alg
from .linalg import PrimeField, has_sqrt_minus_one
from .semigroup import SemigroupTable, canonical_encoding, census, semigroup_id, top_quotient

log = logging.getLogger(__name__)


class EmptyGraph(ValueError):
    """No semigroups match the requested parameters."""


class InvalidParameters(ValueError):
    pass


class NoAlivePath(ValueError):
    """The tree has no unique surviving path at the chosen horizon."""


class NoPeriodFound(RuntimeError):
    """No defect/period pair within the bounds; not a refutation."""


class EdgeMismatch(RuntimeError):
    """The algebra quotient disagrees with the semigroup quotient."""


@dataclass
class Vertex:
    id: str
    dim: int
    label: int
    parent: str | None
    commutative: bool
    fingerprint: tuple
    members: list[str]
    algebra: alg.Algebra | None = field(default=None, repr=False, compare=False)

    def to_dict(self) -> dict:
        d = {"id": self.id, "dim": self.dim, "label": self.label, "parent": self.parent,
             "commutative": self.commutative, "fingerprint": _lists(self.fingerprint),
             "members": list(self.members)}
        if self.algebra is not None:
            d["algebra"] = self.algebra.to_record()
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Vertex":
        a = alg.Algebra.from_record(d["algebra"]) if d.get("algebra") else None
        return cls(d["id"], d["dim"], d["label"], d["parent"], d["commutative"],
                   _tuples(d["fingerprint"]), list(d["members"]), a)


def _lists(x):
    return [_lists(y) for y in x] if isinstance(x, (tuple, list)) else x


def _tuples(x):
    return tuple(_tuples(y) for y in x) if isinstance(x, (tuple, list)) else x


class CoclassGraph:
    """A labelled rooted forest; vertices are kept sorted by (dim, id order)."""

    def __init__(self, params: dict, vertices: Iterable[Vertex], reports: Sequence = ()):
        self.params = dict(params)
        self.vertices = list(vertices)
        self.reports = list(reports)
        self._index = {v.id: v for v in self.vertices}
        if len(self._index) != len(self.vertices):
            raise ValueError("duplicate vertex ids")
        self._children: dict[str, list[str]] = {v.id: [] for v in self.vertices}
        for v in self.vertices:
            if v.parent is not None and v.parent in self._children:
                self._children[v.parent].append(v.id)

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, vid) -> bool:
        return vid in self._index

    def __getitem__(self, vid: str) -> Vertex:
        return self._index[vid]

    def children(self, vid: str) -> list[str]:
        return self._children[vid]

    def parent(self, vid: str) -> str | None:
        p = self._index[vid].parent
        return p if p in self._index else None

    @property
    def max_dim(self) -> int:
        return max((v.dim for v in self.vertices), default=-1)

    def level(self, dim: int) -> list[Vertex]:
        return [v for v in self.vertices if v.dim == dim]

    def dims(self) -> list[int]:
        return sorted({v.dim for v in self.vertices})

    def edges(self) -> list[tuple[str, str]]:
        return [(v.parent, v.id) for v in self.vertices if v.parent in self._index]

    def vertex_of_semigroup(self, sid: str) -> str | None:
        if not hasattr(self, "_by_member"):
            self._by_member = {m: v.id for v in self.vertices for m in v.members}
        return self._by_member.get(sid)


# ---------------------------------------------------------------- building

def _check_params(r: int, p: int, d: int, max_order: int):
    if r < 0:
        raise InvalidParameters("coclass must be nonnegative")
    try:
        PrimeField(p)
    except ValueError as exc:
        raise InvalidParameters(str(exc)) from None
    if d < 1:
        raise InvalidParameters("generator number must be positive")
    if max_order < 2 * r + 1:
        raise InvalidParameters(f"max_order must be at least 2r+1 = {2 * r + 1}")


def _group_level(tables: list[SemigroupTable], parents: list[str | None], p: int,
                 budget: int) -> list[list[int]]:
    algebras = [alg.contracted_algebra(t, p) for t in tables]
    keys = [canonical_encoding(t) for t in tables]
    classes = alg.group_by_isomorphism(algebras, keys=keys, budget=budget, bucket_keys=parents)
    return [members for _, members in classes]


def _group_bucket(args) -> list[list[int]]:
    tables, p, budget = args
    return _group_level(tables, [None] * len(tables), p, budget)


def build_graph(r: int, p: int, d: int, max_order: int, *, workers: int = 1,
                budget: int = alg.DEFAULT_BUDGET, check_edges: bool = True,
                levels: dict[int, list[SemigroupTable]] | None = None) -> CoclassGraph:
    """Build ``G_{r,GF(p),d}`` from the semigroups of order at most ``max_order``.

    With ``check_edges`` every vertex's algebra quotient by its last power is
    tested against the parent's representative, cross-checking the
    semigroup-level parent assignment.
    """
    _check_params(r, p, d, max_order)
    if levels is None:
        levels = census(r, d, max_order, workers=workers, log=log.info)
    if not any(levels.get(n) for n in range(1, max_order + 1)):
        raise EmptyGraph(f"no semigroups of coclass {r} with {d} generators up to order {max_order}")
    params = {"r": r, "p": p, "d": d, "max_order": max_order,
              "sqrt_minus_one": has_sqrt_minus_one(p)}
    vertices: list[Vertex] = []
    owner: dict[str, str] = {}            # semigroup id -> vertex id
    reps: dict[str, alg.Algebra] = {}
    for n in range(1, max_order + 1):
        tables = levels.get(n, [])
        if not tables:
            continue
        ids = [semigroup_id(t) for t in tables]
        parents = [owner.get(semigroup_id(top_quotient(t))) if n > 1 else None for t in tables]
        groups = _group_by_parent(tables, parents, p, budget, workers)
        groups.sort(key=lambda m: canonical_encoding(tables[m[0]]))
        for k, members in enumerate(groups):
            vid = f"{n - 1}.{k}"
            rep = alg.contracted_algebra(tables[members[0]], p)
            v = Vertex(vid, n - 1, len(members), parents[members[0]], rep.is_commutative(),
                       rep.fingerprint, [ids[i] for i in members], rep)
            if check_edges and v.parent is not None:
                quot = alg.top_quotient(rep)
                if alg.iso_algebras(quot, reps[v.parent], budget) is None:
                    raise EdgeMismatch(f"vertex {vid}: quotient is not the parent {v.parent}")
            vertices.append(v)
            reps[vid] = rep
            for i in members:
                owner[ids[i]] = vid
        log.info("graph r=%d p=%d d=%d: dim %d: %d semigroups, %d vertices",
                 r, p, d, n - 1, len(tables), len(groups))
    return CoclassGraph(params, vertices)


def _group_by_parent(tables, parents, p, budget, workers) -> list[list[int]]:
    if workers <= 1:
        return _group_level(tables, parents, p, budget)
    buckets: dict[str | None, list[int]] = {}
    for i, par in enumerate(parents):
        buckets.setdefault(par, []).append(i)
    order = sorted(buckets, key=lambda b: (b is not None, b or ""))
    from concurrent.futures import ProcessPoolExecutor
    jobs = [([tables[i] for i in buckets[b]], p, budget) for b in order]
    with ProcessPoolExecutor(workers) as pool:
        results = list(pool.map(_group_bucket, jobs))
    out = []
    for b, res in zip(order, results):
        idx = buckets[b]
        out.extend([[idx[j] for j in members] for members in res])
    return out


# ---------------------------------------------------------------- structure

def roots(g: CoclassGraph) -> list[str]:
    return [v.id for v in g.vertices if g.parent(v.id) is None]


def _deepest(g: CoclassGraph) -> dict[str, int]:
    """Largest dimension of a proper descendant, -1 for leaves."""
    deep: dict[str, int] = {}
    for v in sorted(g.vertices, key=lambda v: -v.dim):
        deep[v.id] = max((max(g[c].dim, deep[c]) for c in g.children(v.id)), default=-1)
    return deep


def alive_vertices(g: CoclassGraph, horizon: int | None = None,
                   reach: int | None = None) -> set[str]:
    """Vertices below ``horizon`` with a descendant of dimension at least ``reach``.

    Both default to the largest computed dimension, and ``reach`` defaults to
    ``horizon``.  Vertices at or past the horizon are never alive: whether
    their branches go on is not visible in the data.  A ``reach`` beyond the
    horizon looks further down before calling a branch alive, which keeps
    short side branches near the horizon from posing as main lines.
    """
    if horizon is None:
        horizon = g.max_dim
    if reach is None:
        reach = horizon
    if reach > g.max_dim or horizon > reach:
        raise ValueError(f"need horizon {horizon} <= reach {reach} <= computed dimension {g.max_dim}")
    deep = _deepest(g)
    return {vid for vid, m in deep.items() if m >= reach and g[vid].dim < horizon}


def coclass_tree(g: CoclassGraph, vid: str) -> CoclassGraph:
    """The descendant subtree ``T(A)`` as a graph rooted at ``vid``."""
    keep, stack = [], [vid]
    while stack:
        u = stack.pop()
        keep.append(u)
        stack.extend(g.children(u))
    keep_set = set(keep)
    verts = []
    for v in g.vertices:
        if v.id in keep_set:
            parent = None if v.id == vid else v.parent
            verts.append(Vertex(v.id, v.dim, v.label, parent, v.commutative, v.fingerprint,
                                list(v.members), v.algebra))
    return CoclassGraph(g.params, verts)


def _branching(g: CoclassGraph, alive: set[str]) -> dict[str, bool]:
    out: dict[str, bool] = {}
    for v in sorted(g.vertices, key=lambda v: -v.dim):
        kids = [c for c in g.children(v.id) if c in alive]
        out[v.id] = len(kids) > 1 or any(out[c] for c in kids)
    return out


def maximal_trees(g: CoclassGraph, horizon: int | None = None,
                  reach: int | None = None) -> list[str]:
    """Roots of maximal coclass trees at the given horizon.

    A root is alive, its alive descendants form a single path, and its parent
    (if any) has branching alive descendants.
    """
    alive = alive_vertices(g, horizon, reach)
    branch = _branching(g, alive)
    out = []
    for v in g.vertices:
        if v.id not in alive or branch[v.id]:
            continue
        par = g.parent(v.id)
        if par is None or branch[par]:
            out.append(v.id)
    return out


def alive_path(g: CoclassGraph, root: str, horizon: int | None = None,
               reach: int | None = None) -> list[str]:
    alive = alive_vertices(g, horizon, reach)
    if root not in alive:
        raise NoAlivePath(f"{root} has no descendant at the horizon")
    path = [root]
    while True:
        kids = [c for c in g.children(path[-1]) if c in alive]
        if len(kids) > 1:
            raise NoAlivePath(f"alive path branches at {path[-1]}")
        if not kids:
            return path
        path.append(kids[0])


# ---------------------------------------------------------------- tree codes

def tree_code(g: CoclassGraph, depth: int | None = None, root: str | None = None) -> str:
    """AHU code of the unlabelled tree below ``root``, cut ``depth`` levels down."""
    if root is None:
        rs = roots(g)
        if len(rs) != 1:
            raise ValueError(f"graph has {len(rs)} roots; pass one explicitly")
        root = rs[0]
    return _Codes(g).code(root, depth)


class _Codes:
    def __init__(self, g: CoclassGraph):
        self.g = g
        self.memo: dict[tuple[str, int | None], str] = {}

    def code(self, vid: str, depth: int | None) -> str:
        key = (vid, depth)
        if key not in self.memo:
            if depth == 0:
                s = "()"
            else:
                nxt = None if depth is None else depth - 1
                s = "(" + "".join(sorted(self.code(c, nxt) for c in self.g.children(vid))) + ")"
            self.memo[key] = s
        return self.memo[key]


def level_codes(g: CoclassGraph) -> list[tuple[int, tuple[str, ...], tuple[int, ...]]]:
    """Per dimension: sorted codes of the subtrees hanging there and sorted labels.

    Two graphs with equal level codes are isomorphic as unlabelled forests.
    """
    codes = _Codes(g)
    rs = roots(g)
    out = []
    for dim in g.dims():
        lv = g.level(dim)
        out.append((dim, tuple(sorted(codes.code(v.id, None) for v in lv if v.id in rs)),
                    tuple(sorted(v.label for v in lv))))
    return out


def forest_code(g: CoclassGraph) -> str:
    """Code of the whole forest, with labels attached to each node."""
    memo: dict[str, str] = {}

    def lab(vid: str) -> str:
        if vid not in memo:
            v = g[vid]
            memo[vid] = f"({v.label}{'b' if not v.commutative else ''}" + \
                "".join(sorted(lab(c) for c in g.children(vid))) + ")"
        return memo[vid]

    return "".join(sorted(lab(r) for r in roots(g)))


# ---------------------------------------------------------------- polynomials

@dataclass
class FamilyPolynomial:
    """Exact interpolant of a family's labels; ``samples`` are ``(i, label)``."""
    root: str
    coefficients: list[Fraction]
    samples: list[tuple[int, int]]
    members: list[str] = field(default_factory=list)

    @property
    def degree(self) -> int:
        nz = [i for i, c in enumerate(self.coefficients) if c != 0]
        return nz[-1] if nz else 0

    def __call__(self, x) -> Fraction:
        return sum((c * Fraction(x) ** i for i, c in enumerate(self.coefficients)), Fraction(0))

    def fits(self) -> bool:
        return all(self(i) == y for i, y in self.samples)

    def to_dict(self) -> dict:
        return {"root": self.root, "coefficients": [str(c) for c in self.coefficients],
                "samples": [list(s) for s in self.samples], "members": list(self.members)}

    @classmethod
    def from_dict(cls, d: dict) -> "FamilyPolynomial":
        return cls(d["root"], [Fraction(c) for c in d["coefficients"]],
                   [tuple(s) for s in d["samples"]], list(d.get("members", [])))

    def __str__(self):
        terms = []
        for i, c in reversed(list(enumerate(self.coefficients))):
            if c == 0:
                continue
            coef = "" if c == 1 and i else ("-" if c == -1 and i else f"{c}*" if i else f"{c}")
            terms.append(coef + ("" if i == 0 else "x" if i == 1 else f"x^{i}"))
        return " + ".join(terms) or "0"


def interpolate(samples: Sequence[tuple[int, int]]) -> list[Fraction]:
    """Lowest-degree polynomial through the points, as ascending coefficients."""
    xs = [Fraction(x) for x, _ in samples]
    table = [Fraction(y) for _, y in samples]
    newton = []
    # divided differences, column by column
    for level in range(len(xs)):
        newton.append(table[0])
        table = [(table[i + 1] - table[i]) / (xs[i + level + 1] - xs[i])
                 for i in range(len(table) - 1)]
    coeffs = [Fraction(0)] * max(1, len(xs))
    basis = [Fraction(1)]                 # running product (x - x_0)...(x - x_{k-1})
    for k, a in enumerate(newton):
        for i, b in enumerate(basis):
            coeffs[i] += a * b
        if k < len(xs) - 1:
            nxt = [Fraction(0)] * (len(basis) + 1)
            for i, b in enumerate(basis):
                nxt[i + 1] += b
                nxt[i] -= xs[k] * b
            basis = nxt
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


# ---------------------------------------------------------------- periodicity

@dataclass
class PeriodicityReport:
    root: str
    path: list[str]
    defect: int
    period: int
    verified_depth: int
    horizon: int
    strong: bool
    weak_defect: int
    weak_period: int
    families: list[FamilyPolynomial] = field(default_factory=list)
    unresolved: list[str] = field(default_factory=list)
    degree_bound: int = 2
    reach: int | None = None

    def to_dict(self) -> dict:
        return {"root": self.root, "path": list(self.path), "defect": self.defect,
                "period": self.period, "verified_depth": self.verified_depth,
                "horizon": self.horizon, "strong": self.strong,
                "weak_defect": self.weak_defect, "weak_period": self.weak_period,
                "degree_bound": self.degree_bound, "reach": self.reach,
                "families": [f.to_dict() for f in self.families],
                "unresolved": list(self.unresolved)}

    @classmethod
    def from_dict(cls, d: dict) -> "PeriodicityReport":
        return cls(d["root"], list(d["path"]), d["defect"], d["period"], d["verified_depth"],
                   d["horizon"], d["strong"], d["weak_defect"], d["weak_period"],
                   [FamilyPolynomial.from_dict(f) for f in d["families"]],
                   list(d["unresolved"]), d.get("degree_bound", 2), d.get("reach"))


def _shape(g: CoclassGraph, vid: str, alive: set[str]) -> tuple:
    v = g[vid]
    return (vid in alive, v.commutative, v.fingerprint[4:7], v.label)


def _match(g: CoclassGraph, codes: _Codes, alive: set[str], u: str, v: str, depth: int,
           out: dict[str, str]):
    """Extend ``out`` by a tree isomorphism from ``u`` to ``v`` cut at ``depth``.

    Siblings with equal codes are paired in order of aliveness, annihilator
    data and label, so that vertices of the same kind line up.
    """
    out[u] = v
    if depth == 0:
        return
    key = lambda c: (codes.code(c, depth - 1), _shape(g, c, alive), c)
    left = sorted(g.children(u), key=key)
    right = sorted(g.children(v), key=key)
    for a, b in zip(left, right):
        _match(g, codes, alive, a, b, depth - 1, out)


def _weak(g: CoclassGraph, codes: _Codes, path: list[str], l: int, k: int) -> int | None:
    """Depth up to which ``T(A_l)`` and ``T(A_{l+k})`` agree, or None."""
    a, b = path[l - 1], path[l + k - 1]
    depth = g.max_dim - g[b].dim
    if depth < 1:
        return None
    for t in range(depth + 1):
        if codes.code(a, t) != codes.code(b, t):
            return None
    return depth


def _families(g: CoclassGraph, codes: _Codes, alive: set[str], path: list[str], l: int, k: int,
              depth: int) -> list[list[str]]:
    a, b = path[l - 1], path[l + k - 1]
    mu: dict[str, str] = {}
    _match(g, codes, alive, a, b, depth, mu)
    inner = set(coclass_tree(g, b)._index)
    families = []
    for u in sorted(mu, key=lambda x: (g[x].dim, x)):
        if u in inner:
            continue
        fam = [u]
        while fam[-1] in mu:
            fam.append(mu[fam[-1]])
        families.append(fam)
    return families


def detect_periodicity(g: CoclassGraph, root: str, max_defect: int = 6, max_period: int = 4,
                       degree_bound: int = 2, horizon: int | None = None,
                       reach: int | None = None) -> PeriodicityReport:
    """Search defect ``l`` and period ``k`` for the coclass tree at ``root``.

    Pairs are tried in lexicographic order.  The first pair whose truncated
    trees agree at every available depth and whose families all have labels
    of degree at most ``degree_bound`` is reported as strong; failing that,
    the least weakly periodic pair is reported with ``strong = False``.
    Each family needs one sample more than its interpolant's degree
    requires, otherwise it is listed as unresolved and the pair is not
    strong.  Everything holds up to the computed depth only.
    """
    if horizon is None:
        horizon = g.max_dim
    path = alive_path(g, root, horizon, reach)
    alive = alive_vertices(g, horizon, reach)
    codes = _Codes(g)
    weak_pair = None
    for l in range(1, max_defect + 1):
        for k in range(1, max_period + 1):
            if l + k > len(path):
                continue
            depth = _weak(g, codes, path, l, k)
            if depth is None:
                continue
            if weak_pair is None:
                weak_pair = (l, k, depth)
            fams, unresolved, ok = _fit(g, codes, alive, path, l, k, depth, degree_bound)
            if ok:
                return PeriodicityReport(root, path, l, k, depth, horizon, True, weak_pair[0],
                                         weak_pair[1], fams, unresolved, degree_bound, reach)
    if weak_pair is None:
        raise NoPeriodFound(f"no (l, k) with l <= {max_defect}, k <= {max_period} below {root}")
    l, k, depth = weak_pair
    fams, unresolved, _ = _fit(g, codes, alive, path, l, k, depth, degree_bound)
    return PeriodicityReport(root, path, l, k, depth, horizon, False, l, k, fams, unresolved,
                             degree_bound, reach)


def _fit(g, codes, alive, path, l, k, depth, degree_bound):
    """Fit every family; a family counts as verified when its interpolant has
    degree at most ``degree_bound`` and at least one sample beyond those
    needed to determine it."""
    fams, unresolved, ok = [], [], True
    for fam in _families(g, codes, alive, path, l, k, depth):
        samples = [(i, g[v].label) for i, v in enumerate(fam)]
        poly = FamilyPolynomial(fam[0], interpolate(samples), samples, fam)
        fams.append(poly)
        if poly.degree > degree_bound:
            ok = False
        elif poly.degree > len(samples) - 2:
            unresolved.append(fam[0])
            ok = False
    return fams, unresolved, ok and bool(fams)


def verify_report(g: CoclassGraph, report: PeriodicityReport) -> bool:
    """Recheck a report against the stored graph from scratch."""
    codes = _Codes(g)
    path = alive_path(g, report.root, report.horizon, report.reach)
    if path != report.path:
        return False
    depth = _weak(g, codes, path, report.defect, report.period)
    if depth is None or depth != report.verified_depth:
        return False
    if not report.strong:
        return True
    fams, _, ok = _fit(g, codes, alive_vertices(g, report.horizon, report.reach), path, report.defect,
                       report.period, depth, report.degree_bound)
    return ok and [f.to_dict() for f in fams] == [f.to_dict() for f in report.families]


def analyze(g: CoclassGraph, horizon: int | None = None, max_defect: int = 6,
            max_period: int = 4, degree_bound: int = 2,
            reach: int | None = None) -> list[PeriodicityReport | dict]:
    """A report per maximal coclass tree; failures become ``{"root", "error"}`` entries."""
    out: list[PeriodicityReport | dict] = []
    for r in maximal_trees(g, horizon, reach):
        try:
            out.append(detect_periodicity(g, r, max_defect, max_period, degree_bound, horizon,
                                          reach))
        except (NoPeriodFound, NoAlivePath) as exc:
            out.append({"root": r, "error": type(exc).__name__, "message": str(exc)})
    return out


# ---------------------------------------------------------------- export

def export_json(g: CoclassGraph) -> str:
    reports = [r.to_dict() if isinstance(r, PeriodicityReport) else r for r in g.reports]
    doc = {"params": g.params, "vertices": [v.to_dict() for v in g.vertices], "reports": reports}
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def import_json(text: str) -> CoclassGraph:
    doc = json.loads(text)
    reports = [PeriodicityReport.from_dict(r) if "path" in r else r for r in doc.get("reports", [])]
    return CoclassGraph(doc["params"], [Vertex.from_dict(v) for v in doc["vertices"]], reports)


def export_dot(g: CoclassGraph, rankdir: str = "TB", title: str | None = None) -> str:
    """Graphviz source: boxes for non-commutative algebras, ``d=<dim> | <label>`` text."""
    lines = ["digraph coclass {", f"  rankdir={rankdir};"]
    if g.params:
        p = g.params
        if title is None and "r" in p:
            title = (f"G_{{{p['r']},GF({p['p']}),{p['d']}}} up to order {p['max_order']}; "
                     f"sqrt(-1) in field: {str(p.get('sqrt_minus_one')).lower()}")
        if title:
            lines.append(f'  label="{title}";')
    lines.append("  node [shape=ellipse];")
    for dim in g.dims():
        ids = " ".join(f'"{v.id}";' for v in g.level(dim))
        lines.append(f"  {{ rank=same; {ids} }}")
    for v in g.vertices:
        shape = ", shape=box" if not v.commutative else ""
        lines.append(f'  "{v.id}" [label="d={v.dim} | {v.label}"{shape}];')
    for a, b in g.edges():
        lines.append(f'  "{a}" -> "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_dot(text: str) -> tuple[dict[str, tuple[int, int, bool]], list[tuple[str, str]]]:
    """Read back what :func:`export_dot` writes: nodes as ``id -> (dim, label, boxed)``."""
    import re
    nodes, edges = {}, []
    node_re = re.compile(r'^\s*"([^"]+)" \[label="d=(\d+) \| (\d+)"(, shape=box)?\];$')
    edge_re = re.compile(r'^\s*"([^"]+)" -> "([^"]+)";$')
    for line in text.splitlines():
        m = node_re.match(line)
        if m:
            nodes[m.group(1)] = (int(m.group(2)), int(m.group(3)), m.group(4) is not None)
            continue
        m = edge_re.match(line)
        if m:
            edges.append((m.group(1), m.group(2)))
    return nodes, edges
