import random

import numpy as np
import pytest

from semicoclass import algebra as alg
from semicoclass import semigroup as sg
from semicoclass.acceptance import explicit_map, explicit_pairs
from semicoclass.algebra import (AlgebraIso, DimensionMismatch, Exhausted, NotAnIdeal,
                                 brute_force_iso, change_basis, contracted_algebra,
                                 group_by_isomorphism, iso_algebras)
from semicoclass.linalg import is_invertible, span


def random_invertible(n, p, rnd):
    while True:
        m = np.array([[rnd.randrange(p) for _ in range(n)] for _ in range(n)], dtype=np.int64)
        if is_invertible(m, p):
            return m


def test_rejects_non_associative():
    sc = np.zeros((2, 2, 2), dtype=np.int64)
    sc[0, 0, 1] = 1
    sc[0, 1, 0] = 1           # (e0 e0) e1 = e1 e1 = 0 but e0 (e0 e1) = e0 e0 = e1
    with pytest.raises(ValueError):
        alg.Algebra(3, sc)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_contracted_algebra_invariants(p):
    for r in range(3):
        for t in sg.census(r, min(2, r + 1), 7)[7]:
            a = contracted_algebra(t, p)
            assert a.dim == t.order - 1
            assert a.nilpotency_class == sg.nilpotency_class(t)
            assert a.coclass == sg.coclass(t)
            assert a.is_commutative() == (t.transpose() == t)


def test_monogenic_algebra():
    a = contracted_algebra(sg.monogenic(6), 5)
    assert [s.dim for s in a.power_series] == [5, 4, 3, 2, 1, 0]
    assert a.annihilator.dim == 1 and a.is_commutative()


def test_annihilators_distinguish_n1_n3():
    # in N3 both uv and v^2 vanish, so {x : Ax = 0} is spanned by v and u^(n-2);
    # in N1 v^2 = u^(n-2) and only u^(n-2) survives
    for n in (6, 7):
        a, b = contracted_algebra(sg.N1(n), 3), contracted_algebra(sg.N3(n), 3)
        assert a.annihilator.dim == b.annihilator.dim == 1
        assert (a.right_annihilator.dim, b.right_annihilator.dim) == (1, 2)


def test_quotients():
    a = contracted_algebra(sg.H(7, 3), 3)
    q = alg.top_quotient(a)
    assert iso_algebras(q, contracted_algebra(sg.top_quotient(sg.H(7, 3)), 3))
    with pytest.raises(NotAnIdeal):
        alg.quotient_algebra(a, span([[1] + [0] * (a.dim - 1)], 3, a.dim))


@pytest.mark.parametrize("p", [2, 3, 5, 7, 13])
def test_explicit_coclass_one_maps(p):
    for n in range(5, 10):
        for kind, k in explicit_pairs(n, p):
            a, b, m = explicit_map(kind, n, k, p)
            assert AlgebraIso(m).validates(a, b), (kind, n, k)


def test_bad_witness_rejected():
    a = contracted_algebra(sg.H(6, 3), 3)
    assert not AlgebraIso(np.zeros((a.dim, a.dim), dtype=np.int64)).validates(a, a)
    m = np.eye(a.dim, dtype=np.int64)
    m[0, 0] = 2                            # u -> 2u but u^2 -> u^2
    assert not AlgebraIso(m).validates(a, a)


@pytest.mark.parametrize("p", [2, 3, 5, 13])
def test_search_finds_random_basis_changes(p):
    rnd = random.Random(p)
    tables = [sg.H(8, 4), sg.J(9, 6), sg.N2(8), sg.cc2_mainline(4, 5), sg.mkr_truncation(2, 5)]
    for t in tables:
        a = contracted_algebra(t, p)
        b = change_basis(a, random_invertible(a.dim, p, rnd))
        w = iso_algebras(a, b)
        assert w is not None and w.validates(a, b), t


def test_dimension_mismatch_and_budget():
    a, b = contracted_algebra(sg.H(6, 3), 3), contracted_algebra(sg.H(7, 3), 3)
    with pytest.raises(DimensionMismatch):
        iso_algebras(a, b)
    c = contracted_algebra(sg.H(7, 4), 3)
    with pytest.raises(Exhausted):
        iso_algebras(b, c, budget=0)


@pytest.mark.parametrize("p", [2, 3])
def test_search_agrees_with_exhaustive_search_dim3(p):
    tables = [t for n in range(2, 5) for r in range(n - 1) for t in sg.brute_force_census(n, r)]
    algebras = [contracted_algebra(t, p) for t in tables]
    for i, a in enumerate(algebras):
        for b in algebras[i:]:
            if a.dim != b.dim:
                continue
            fast, slow = iso_algebras(a, b), brute_force_iso(a, b)
            assert (fast is None) == (slow is None)
            if slow is not None:
                assert slow.validates(a, b)


def test_characteristic_three_split():
    # two coclass-2 semigroups of order 6 whose algebras merge over GF(7)
    # but stay apart over GF(3)
    by_id = {sg.semigroup_id(t): t for t in sg.brute_force_census(6, 2, 2)}
    a7 = [contracted_algebra(t, 7) for t in by_id.values()]
    a3 = [contracted_algebra(t, 3) for t in by_id.values()]
    classes7 = group_by_isomorphism(a7)
    classes3 = group_by_isomorphism(a3)
    assert len(classes3) == len(classes7) + 1


def test_group_by_isomorphism_is_order_independent():
    tables = sg.coclass_one_family(8)
    algebras = [contracted_algebra(t, 3) for t in tables]
    keys = [sg.canonical_encoding(t) for t in tables]
    first = group_by_isomorphism(algebras, keys=keys)
    perm = list(reversed(range(len(tables))))
    second = group_by_isomorphism([algebras[i] for i in perm], keys=[keys[i] for i in perm])
    as_sets = lambda classes, idx: sorted(sorted(keys[idx[i]] for i in m) for _, m in classes)
    assert as_sets(first, list(range(len(tables)))) == as_sets(second, perm)
    assert len(first) == 5                   # 8 even, no sqrt(-1) in GF(3)


@pytest.mark.parametrize("p", [2, 3])
def test_row_search_matches_table(p):
    # the lazy stage-one search used for large fields must agree with the table
    from semicoclass.algebra import _solve_stage_one, _square_relations, _stage_one_rows
    for t in sg.census(2, 3, 6)[6] + sg.census(1, 2, 6)[6]:
        g = contracted_algebra(t, p)._graded
        b, rel = _square_relations(g)
        table = _solve_stage_one(p, g.d, rel.reshape(-1, g.d, g.d), b)
        rows = list(_stage_one_rows(p, g.d, rel, b, b))
        assert np.array_equal(table.reshape(len(table), -1), np.array(rows).reshape(len(rows), -1))
