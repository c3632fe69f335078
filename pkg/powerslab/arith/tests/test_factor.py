import os
import random
import threading

from powerslab.util.testing import run_tests_if_main, raises

from powerslab.arith import (FactorList, FactorCache, factorize, is_prime,
                             euler_phi)


def product(fl):
    result = 1
    for p, e in fl:
        result *= p ** e
    return result


def test_factorize_examples():
    assert list(factorize(1)) == []
    assert list(factorize(63)) == [(3, 2), (7, 1)]
    assert list(factorize(2 ** 24 - 1)) == [(3, 2), (5, 1), (7, 1), (13, 1),
                                            (17, 1), (241, 1)]
    assert factorize(2 ** 61 - 1).factors == ((2 ** 61 - 1, 1), )
    assert factorize(2 ** 64 - 1).primes == (3, 5, 17, 257, 641, 65537,
                                             6700417)
    with raises(ValueError):
        factorize(0)
    with raises(ValueError):
        factorize(2 ** 64)


def test_factorize_large_semiprimes():
    # Two primes above the trial division bound
    p, q = 1000003, 4294967311
    assert factorize(p * q).factors == ((p, 1), (q, 1))
    assert factorize(p * p * 3).factors == ((3, 1), (p, 2))
    n = 2 ** 59 - 1
    fl = factorize(n)
    assert product(fl) == n
    assert all(is_prime(p) for p in fl.primes)


def test_factorize_round_trip_random():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randrange(1, 2 ** 64)
        fl = factorize(n)
        assert fl.n == n
        assert product(fl) == n
        assert list(fl.primes) == sorted(set(fl.primes))
        assert all(is_prime(p) for p in fl.primes)
    # Deterministic
    assert factorize(2 ** 62 - 57) == factorize(2 ** 62 - 57)


def test_is_prime():
    primes = [n for n in range(200) if is_prime(n)]
    assert primes[:10] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert len(primes) == 46
    assert is_prime(2 ** 61 - 1)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7
    assert not is_prime(2 ** 64 - 1)
    with raises(ValueError):
        is_prime(2 ** 64)


def test_euler_phi():
    assert euler_phi(1) == 1
    assert euler_phi(63) == 36
    assert euler_phi(2 ** 24 - 1) == 6 * 4 * 6 * 12 * 16 * 240 == 6635520
    assert euler_phi(factorize(97)) == 96


def test_factor_list():
    fl = FactorList(63, [(3, 2), (7, 1)])
    assert str(fl) == '63: 3^2 7^1'
    assert FactorList.parse('63: 3^2 7^1') == fl
    assert str(FactorList(1, [])) == '1:'
    assert FactorList.parse('1:') == factorize(1)
    assert len(fl) == 2
    with raises(ValueError):
        FactorList(64, [(3, 2), (7, 1)])
    with raises(ValueError):
        FactorList(63, [(7, 1), (3, 2)])
    with raises(ValueError):
        FactorList.parse('15: 15^1')
    with raises(ValueError):
        FactorList.parse('15 3 5')


def test_factor_cache(tmpdir):
    directory = os.path.join(str(tmpdir), 'cache')
    cache = FactorCache(directory)
    assert len(cache) == 0
    assert not cache.flush()  # nothing to write, no file created
    assert not os.path.exists(cache.filename)

    for n in (2 ** 24 - 1, 63, 1000):
        factorize(n, cache)
    assert 63 in cache
    assert cache.flush()
    assert not cache.flush()

    with open(cache.filename, 'rb') as f:
        lines = f.read().decode().splitlines()
    assert lines == ['63: 3^2 7^1', '1000: 2^3 5^3',
                     '16777215: 3^2 5^1 7^1 13^1 17^1 241^1']

    # A second cache sees the entries, and merges on flush
    cache2 = FactorCache(directory)
    assert cache2.get(63) == factorize(63)
    factorize(10, cache2)
    factorize(77, cache)
    cache2.flush()
    cache.flush()
    with open(cache.filename, 'rb') as f:
        ns = [int(line.split(':')[0]) for line in f.read().decode().splitlines()]
    assert ns == [10, 63, 77, 1000, 16777215]


def test_factor_cache_bad_lines(tmpdir):
    directory = str(tmpdir)
    with open(os.path.join(directory, 'factors.txt'), 'wb') as f:
        f.write(b'63: 3^2 7^1\n64: 3^2 7^1\nnonsense\n15: 15^1\n')
    cache = FactorCache(directory)
    assert len(cache) == 1


def test_factor_cache_threads(tmpdir):
    cache = FactorCache(str(tmpdir))
    errors = []

    def work(offset):
        try:
            for n in range(offset, 3000, 4):
                assert product(factorize(n + 1, cache)) == n + 1
        except Exception as err:  # pragma: no cover
            errors.append(err)

    threads = [threading.Thread(target=work, args=(i, )) for i in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert not errors
    assert len(cache) == 3000
    cache.flush()
    assert len(FactorCache(str(tmpdir))) == 3000


run_tests_if_main()
