import random
import itertools

import numpy as np

from powerslab.util.testing import run_tests_if_main

from powerslab.arith import singular_factor
from powerslab.spectra import (build_distribution, correlate_r,
                               SingularWeights, odd_part)
from powerslab.spectra import _correlation


def brute_force_r(k, L):
    r = {}
    for exps in itertools.product(range(L + 1), repeat=2 * k):
        m = sum(2 ** a for a in exps[:k]) - sum(2 ** a for a in exps[k:])
        if m:
            r[m] = r.get(m, 0) + 1
    return r


def test_correlate_examples():
    assert correlate_r(build_distribution(1, 1)) == {-1: 1, 1: 1}
    r = correlate_r(build_distribution(1, 2))
    assert r == {-3: 1, -2: 1, -1: 1, 1: 1, 2: 1, 3: 1}
    assert correlate_r(build_distribution(1, 0)) == {}


def test_correlate_matches_brute_force():
    for k in (1, 2):
        for L in range(0, 7):
            assert correlate_r(build_distribution(k, L)) == brute_force_r(k, L)


def test_correlate_symmetry_and_mass():
    rng = random.Random(3)
    for _ in range(6):
        k, L = rng.choice([(1, 30), (2, 12), (3, 6), (4, 4)])
        dist = build_distribution(k, L)
        r = correlate_r(dist)
        assert all(r[-m] == v for m, v in r.items())
        assert 0 not in r
        assert sum(r.values()) + dist.collisions() == (L + 1) ** (2 * k)


def test_correlate_blocks_do_not_matter(monkeypatch):
    dist = build_distribution(3, 5)
    expected = correlate_r(dist)
    assert correlate_r(dist, block_size=7) == expected
    monkeypatch.setattr(_correlation, 'BLOCK_SIZE', 50)
    assert correlate_r(dist) == expected


def test_correlate_big_values():
    # Python int path: 2^a - 2^b has odd part 2^d - 1
    dist = build_distribution(1, 64)
    r = correlate_r(dist)
    assert len(r) == 2 * 65 * 64 // 2
    assert sum(r.values()) + dist.collisions() == 65 ** 2
    for m in r:
        if m > 0:
            odd = m
            while odd % 2 == 0:
                odd //= 2
            assert (odd + 1) & odd == 0  # odd = 2^d - 1
            assert 1 <= (odd + 1).bit_length() - 1 <= 64


def test_k1_odd_parts_are_mersenne():
    r = correlate_r(build_distribution(1, 20))
    positive = np.array([m for m in r if m > 0], dtype=np.int64)
    odd = odd_part(positive)
    assert ((odd + 1) & odd == 0).all()


def test_singular_weights():
    rng = random.Random(5)
    ms = [rng.randrange(1, 3 * 2 ** 20) for _ in range(500)] + [1, 2, 3, 105]
    table = SingularWeights(3 * 2 ** 20)
    memo = SingularWeights(2 ** 40)
    F_table = table(np.array(ms, dtype=np.int64))
    F_memo = memo(np.array(ms, dtype=np.int64))
    for m, a, b in zip(ms, F_table, F_memo):
        exact = singular_factor(m)
        assert exact.lo * (1 - 1e-14) <= a <= exact.hi * (1 + 1e-14)
        assert abs(a - b) <= 1e-14 * a
        assert memo.scalar(m) == b
    assert abs(table(np.array([105]))[0] - 3.2) < 1e-14


run_tests_if_main()
