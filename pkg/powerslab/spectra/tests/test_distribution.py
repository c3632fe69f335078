import itertools

from powerslab.util.testing import run_tests_if_main, raises, config_options

from powerslab.spectra import (build_distribution, default_L, MAX_L,
                               DEFAULT_L)


def test_build_distribution_examples():
    assert build_distribution(1, 1).counts == {1: 1, 2: 1}
    assert build_distribution(2, 1).counts == {2: 1, 3: 2, 4: 1}
    d = build_distribution(3, 2)
    assert d.total() == 27
    assert d.max_value == 12
    assert min(d.counts) == 3
    assert d[12] == 1
    # 7 = 1 + 2 + 4 in 3! orders, 11 has no representation
    assert d[7] == 6
    assert d[11] == 0


def test_build_distribution_matches_enumeration():
    for k, L in [(1, 5), (2, 4), (3, 3), (4, 2)]:
        expected = {}
        for exps in itertools.product(range(L + 1), repeat=k):
            v = sum(2 ** a for a in exps)
            expected[v] = expected.get(v, 0) + 1
        d = build_distribution(k, L)
        assert d.counts == expected
        assert list(d.counts) == sorted(expected)
        assert d.total() == (L + 1) ** k
        assert min(d.counts) == k and d.max_value == k * 2 ** L


def test_build_distribution_big_values():
    d = build_distribution(1)
    assert d.L == 64
    assert d.max_value == 2 ** 64
    assert not d.fits_int64()
    with raises(ValueError):
        d.as_arrays()
    d2 = build_distribution(2, 10)
    values, mults = d2.as_arrays()
    assert values.tolist() == sorted(d2.counts)
    assert int(mults.sum()) == 11 ** 2


def test_build_distribution_errors():
    assert DEFAULT_L[4] <= MAX_L[4]
    with raises(ValueError):
        build_distribution(5, 3)
    with raises(ValueError):
        build_distribution(0, 3)
    with raises(ValueError):
        build_distribution(2, -1)
    with raises(ValueError):
        build_distribution(4, 25)
    with raises(ValueError):
        build_distribution(1, 65)


def test_default_L_from_config():
    assert [default_L(k) for k in (1, 2, 3, 4)] == [64, 24, 24, 24]
    with config_options(ak_truncation='64,48,32,24'):
        assert [default_L(k) for k in (1, 2, 3, 4)] == [64, 48, 32, 24]
        assert default_L(5) is None
    with config_options(ak_truncation=(3, 3, 2, 1)):
        assert build_distribution(2).L == 3
        assert build_distribution(4).total() == 2 ** 4
    with config_options(ak_truncation='64,48,32,25'):
        with raises(ValueError):
            build_distribution(4)
    with config_options(ak_truncation='64,48'):
        with raises(ValueError):
            default_L(2)
    assert default_L(2) == DEFAULT_L[2]


run_tests_if_main()
