import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from semicoclass import semigroup as sg
from semicoclass.semigroup import (BadParameter, NotAnIdeal, NotNilpotent, SemigroupIso,
                                   brute_force_census, canonical_encoding, census, census_record,
                                   check_associative, coclass, descendants, from_rows,
                                   iso_semigroups, nilpotency_class, table_from_record, top_quotient)


def relabel(t, perm):
    """Apply a zero-fixing permutation of the elements."""
    n = t.order
    inv = [0] * n
    for a, b in enumerate(perm):
        inv[b] = a
    return from_rows([[perm[t(inv[a], inv[b])] for b in range(n)] for a in range(n)])


def random_perm(n, rnd):
    rest = list(range(1, n))
    rnd.shuffle(rest)
    return [0] + rest


# ---------------------------------------------------------------- basics

def test_from_rows_validation():
    with pytest.raises(ValueError):
        from_rows([[0, 0], [0]])
    with pytest.raises(ValueError):
        from_rows([[0, 1], [1, 1]])          # 0 not absorbing


def test_monogenic_structure():
    for n in range(1, 8):
        t = sg.monogenic(n)
        assert t.order == n and check_associative(t)
        assert coclass(t) == 0 and nilpotency_class(t) == n - 1


def test_not_nilpotent():
    # {0, e} with e*e = e
    t = from_rows([[0, 0], [0, 1]])
    with pytest.raises(NotNilpotent):
        nilpotency_class(t)


def test_failing_triple_detects_non_associativity():
    t = from_rows([[0, 0, 0], [0, 2, 0], [0, 0, 1]])
    assert not check_associative(t)
    assert sg.failing_triple(t) is not None


def test_rees_quotient_and_top_quotient():
    t = sg.monogenic(5)                      # u, u^2, u^3, u^4
    q = top_quotient(t)
    assert iso_semigroups(q, sg.monogenic(4))
    with pytest.raises(NotAnIdeal):
        sg.rees_quotient(t, [1])


@pytest.mark.parametrize("n", range(5, 11))
def test_coclass_one_constructors(n):
    fam = sg.coclass_one_family(n)
    assert len(fam) == n + 2 + n // 2
    for t in fam:
        assert check_associative(t), t
        assert coclass(t) == 1 and len(sg.minimal_generators(t)) == 2
    assert len({canonical_encoding(t) for t in fam}) == len(fam)


def test_constructor_parameter_checks():
    with pytest.raises(BadParameter):
        sg.H(5, 5)
    with pytest.raises(BadParameter):
        sg.J(6, 3)
    with pytest.raises(BadParameter):
        sg.X(7)
    with pytest.raises(BadParameter):
        sg.cc2_mainline(6, 3)


def test_anti_isomorphic_pairs():
    for n in (5, 6, 7):
        assert sg.anti_isomorphic(sg.N1(n), sg.N2(n))
        assert sg.anti_isomorphic(sg.N3(n), sg.N4(n))
        assert not iso_semigroups(sg.N1(n), sg.N2(n))


def test_mkr_truncation_and_mainlines():
    for r in range(3):
        for c in range(1, 6):
            t = sg.mkr_truncation(r, c)
            assert t.order == c + r + 1 and coclass(t) == r and nilpotency_class(t) == c
    for i in range(1, 6):
        for c in range(2, 6):
            t = sg.cc2_mainline(i, c)
            assert check_associative(t) and coclass(t) == 2 and nilpotency_class(t) == c
    encs = {canonical_encoding(sg.cc2_mainline(i, 4)) for i in range(1, 6)}
    assert len(encs) == 5


# ---------------------------------------------------------------- canonical form

all_small = [t for n in range(2, 6) for r in range(n - 1) for t in brute_force_census(n, r)]


@given(st.sampled_from(all_small), st.randoms(use_true_random=False))
@settings(max_examples=150, deadline=None)
def test_canonical_encoding_is_relabelling_invariant(t, rnd):
    u = relabel(t, random_perm(t.order, rnd))
    assert canonical_encoding(u) == canonical_encoding(t)
    iso = iso_semigroups(t, u)
    assert iso is not None and iso.validates(t, u)


def test_canonical_encoding_separates_classes():
    # the census of each order is a set of pairwise non-isomorphic tables
    for n in range(2, 6):
        tables = [t for r in range(n - 1) for t in brute_force_census(n, r)]
        encs = [canonical_encoding(t) for t in tables]
        assert len(set(encs)) == len(encs)
        for a in range(len(tables)):
            for b in range(a + 1, len(tables)):
                assert iso_semigroups(tables[a], tables[b]) is None


def test_iso_witness_composition():
    rnd = random.Random(3)
    t = sg.H(7, 3)
    u = relabel(t, random_perm(t.order, rnd))
    w = relabel(u, random_perm(t.order, rnd))
    f, g = iso_semigroups(t, u), iso_semigroups(u, w)
    assert f.then(g).validates(t, w)
    assert f.inverse().validates(u, t)
    assert not SemigroupIso(tuple(range(t.order - 1)) + (0,)).validates(t, t)


# ---------------------------------------------------------------- census

def _all_nilpotent_tables(n):
    """Every table on {0..n-1} with 0 absorbing that is associative and nilpotent."""
    free = (n - 1) ** 2
    idx = np.indices((n,) * free).reshape(free, -1).T
    tabs = np.zeros((len(idx), n, n), dtype=np.int64)
    tabs[:, 1:, 1:] = idx.reshape(-1, n - 1, n - 1)
    b = np.arange(len(tabs))[:, None, None, None]
    x = np.arange(n)
    left = tabs[b, tabs[:, :, :, None], x[None, None, None, :]]
    right = tabs[b, x[None, :, None, None], tabs[:, None, :, :]]
    assoc = (left == right).all(axis=(1, 2, 3))
    # nilpotent iff every product of n elements is zero: iterate S^k
    power = np.ones((len(tabs), n), dtype=bool)
    for _ in range(n):
        nxt = np.zeros_like(power)
        for a in range(n):
            for c in range(n):
                hit = power[:, c]
                nxt[np.arange(len(tabs))[hit], tabs[hit, a, c]] = True
        power = nxt
    nil = power[:, 1:].sum(axis=1) == 0
    return [from_rows(t) for t in tabs[assoc & nil]]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_brute_force_census_against_all_tables(n):
    reps = []
    for t in _all_nilpotent_tables(n):
        if not any(iso_semigroups(t, u) for u in reps):
            reps.append(t)
    ours = [t for r in range(n - 1) for t in brute_force_census(n, r)]
    assert len(ours) == len(reps)
    assert {canonical_encoding(t) for t in ours} == {canonical_encoding(t) for t in reps}


def test_census_coclass_one():
    levels = census(1, 2, 9)
    assert {n: len(v) for n, v in levels.items() if v} == {3: 1, 4: 9, 5: 9, 6: 11, 7: 12, 8: 14, 9: 15}


def test_census_coclass_zero_and_empty():
    levels = census(0, 1, 10)
    assert all(len(levels[n]) == 1 for n in range(1, 11))
    assert not any(census(1, 3, 7).values())


def test_census_is_deterministic_and_sorted():
    a = census(2, 2, 7)
    b = census(2, 2, 7)
    assert a == b
    for ts in a.values():
        encs = [canonical_encoding(t) for t in ts]
        assert encs == sorted(encs)


def test_descendants_have_right_parent():
    for t in census(1, 2, 7)[7]:
        for s in descendants(t, 1):
            assert s.order == t.order + 1 and coclass(s) == 1
            assert canonical_encoding(top_quotient(s)) == canonical_encoding(t)
    with pytest.raises(BadParameter):
        descendants(sg.monogenic(4), 1)


@pytest.mark.parametrize("r", [1, 2])
def test_descendant_pipeline_matches_brute_force(r):
    pipe = {}
    for d in range(1, r + 2):
        for n, ts in census(r, d, 6, seed_order=2 * r + 1).items():
            pipe.setdefault(n, set()).update(canonical_encoding(t) for t in ts)
    for n in range(1, 7):
        assert pipe.get(n, set()) == {canonical_encoding(t) for t in brute_force_census(n, r)}


def test_census_record_round_trip():
    for t in sg.coclass_one_family(7):
        rec = census_record(t)
        back = table_from_record(rec)
        assert canonical_encoding(back) == canonical_encoding(t)
        assert rec["id"] == sg.semigroup_id(t)
