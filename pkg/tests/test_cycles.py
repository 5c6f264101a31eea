import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from comer.cosets import build_coset_table, make_parameters
from comer.cycles import (
    Status,
    classify,
    classify_fast_asymmetric,
    classify_fast_symmetric,
    classify_naive,
    difference_sets,
    fast_test,
    sumset,
)
from comer.errors import NotAsymmetric, NotSymmetric
from comer.numtheory import divisors, primes_between

from conftest import brute_forbidden_grid

F, M = Status.FORBIDDEN, Status.MANDATORY


def table(p, n, backend=None):
    return build_coset_table(make_parameters(p, n), backend)


def members(bitmap):
    return {r for r, bit in enumerate(bitmap) if bit}


def test_sumset_examples(backend):
    t13 = table(13, 4, backend)
    assert members(sumset(t13, 0, 0, backend)) == {2, 4, 5, 6, 10, 12}
    assert members(sumset(table(3, 1, backend), 0, 0, backend)) == {0, 1, 2}
    # brute force: {1,3,9} + {4,12,10} misses X_2 entirely, so (0, 2, 2) is forbidden
    s02 = members(sumset(t13, 0, 2, backend))
    assert s02 == {0, 2, 5, 6, 7, 8, 11}
    assert not s02 & {4, 12, 10}


@pytest.mark.parametrize("p", [13, 29, 71, 113])
def test_sumset_matches_pairwise_sums(p, backend):
    for n in divisors(p - 1)[:5]:
        t = table(p, n, backend)
        for i in range(n):
            for j in range(n):
                expected = {(x + y) % p for x in t.classes[i] for y in t.classes[j]}
                assert members(sumset(t, i, j, backend)) == expected


def test_naive_p113(backend):
    s = classify_naive(table(113, 7, backend), backend)
    assert s.forbidden() == [(0, 0, 0), (0, 0, 4), (0, 3, 3)]
    assert s.tests == 49


def test_naive_small_examples(backend):
    assert classify_naive(table(13, 4, backend), backend)[0, 0] is F
    assert classify_naive(table(3, 1, backend), backend)[0, 0] is M


@pytest.mark.parametrize("i, j, expected", [(0, 0, F), (0, 3, F), (0, 1, M), (0, 2, M)])
def test_fast_test_p13(i, j, expected, backend):
    assert fast_test(table(13, 4, backend), i, j, backend=backend) is expected


def test_fast_test_p113_033(backend):
    t = table(113, 7, backend)
    assert fast_test(t, 3, 3, difference_sets(t, backend), backend) is F


def test_difference_sets_definition():
    t = table(71, 10)
    d = difference_sets(t)
    k = t.params.k
    for j in range(10):
        gj = pow(7, j, 71)
        assert list(d[j * k:(j + 1) * k]) == [(gj - x) % 71 for x in t.coset(0)]


def test_symmetric_examples(backend):
    assert classify_fast_symmetric(table(113, 7, backend), backend).forbidden() == [
        (0, 0, 0), (0, 0, 4), (0, 3, 3)]
    assert classify_fast_symmetric(table(5, 2, backend), backend).forbidden() == [(0, 0, 0)]
    assert classify_fast_symmetric(table(3, 1, backend), backend).forbidden() == []


P71_FORBIDDEN = [
    (0, 0, 0), (0, 0, 3), (0, 0, 4), (0, 0, 5), (0, 0, 8), (0, 0, 9),
    (0, 1, 2), (0, 1, 4), (0, 1, 6), (0, 1, 7), (0, 2, 3), (0, 2, 6),
    (0, 2, 7), (0, 2, 9), (0, 3, 3), (0, 3, 5), (0, 3, 9), (0, 4, 5),
    (0, 4, 7), (0, 4, 8), (0, 5, 5), (0, 5, 7), (0, 6, 8), (0, 7, 8),
    (0, 7, 9), (0, 8, 8),
]


def test_asymmetric_examples(backend):
    s = classify_fast_asymmetric(table(71, 10, backend), backend)
    assert s.forbidden() == P71_FORBIDDEN
    s13 = classify_fast_asymmetric(table(13, 4, backend), backend)
    assert [s13[0, j] for j in range(4)] == [F, M, M, F]


def test_asymmetric_sweep_touches_each_fixed_point_once():
    n, m = 10, 5
    swept = [(i, (t + m) % n) for i in range(n) for t in range(i, n)]
    assert len(swept) == len(set(swept)) == n * (n + 1) // 2
    fixed = [(i, (i + m) % n) for i in range(n)]
    assert all(swept.count(f) == 1 for f in fixed)
    # swept cells and their images under (i, j) -> (j + m, i + m) cover the grid
    covered = set(swept) | {((j + m) % n, (i + m) % n) for i, j in swept}
    assert len(covered) == n * n


def test_parity_guards():
    with pytest.raises(NotSymmetric):
        classify_fast_symmetric(table(71, 10))
    with pytest.raises(NotAsymmetric):
        classify_fast_asymmetric(table(113, 7))


@pytest.mark.parametrize("p, n, method", [(113, 7, "fast-symmetric"), (71, 10, "fast-asymmetric"),
                                          (13, 4, "fast-asymmetric")])
def test_classify_dispatch(p, n, method):
    assert classify(table(p, n)).method == method


@pytest.mark.parametrize("p", primes_between(3, 260))
def test_classifiers_match_brute_force(p):
    for n in divisors(p - 1):
        if n > 30:
            break
        prm = make_parameters(p, n)
        expected = brute_forbidden_grid(p, n, prm.g)
        t = build_coset_table(prm)
        for s in (classify_naive(t), classify(t)):
            assert [[s.is_forbidden(i, j) for j in range(n)] for i in range(n)] == expected


pairs = [(p, n) for p in primes_between(3, 1000) for n in divisors(p - 1) if n <= 30]


@given(st.sampled_from(pairs))
@settings(max_examples=150, deadline=None)
def test_oracle_equivalence_and_invariants(pn):
    p, n = pn
    prm = make_parameters(p, n)
    t = build_coset_table(prm)
    naive, fast = classify_naive(t), classify(t)
    assert naive == fast
    k = prm.k
    assert all(size in (0, k) for size in naive.overlaps)
    assert fast.tests == n * (n + 1) // 2
    assert naive.tests == n * n
    m = prm.m
    for i in range(n):
        for j in range(n):
            if prm.symmetric:
                assert naive[i, j] == naive[j, i]
            else:
                assert naive[i, j] == naive[(j + m) % n, (i + m) % n]
            bm = members(sumset(t, 0, i))
            assert (fast_test(t, i, j) is M) == (t.classes[j] <= bm)


def test_backends_agree_everywhere():
    from comer import _backend

    if "compiled" not in _backend.BACKENDS:
        pytest.skip("compiled kernels not built")
    rng = random.Random(3)
    for p, n in rng.sample(pairs, 200):
        prm = make_parameters(p, n)
        a = build_coset_table(prm, "python")
        b = build_coset_table(prm, "compiled")
        na, nb = classify_naive(a, "python"), classify_naive(b, "compiled")
        assert na == nb and na.overlaps == nb.overlaps
        fa, fb = classify(a, "python"), classify(b, "compiled")
        assert fa == fb and fa.tests == fb.tests


def test_structure_views():
    s = classify(table(113, 7))
    grid = s.grid()
    assert len(grid) == 7 and grid[0][0] is F
    assert len(s.forbidden()) + len(s.mandatory()) == 7 * 8 // 2
    assert (0, 4, 0) in s.forbidden(upper=False)
    assert s.mismatches(s) == []
