import math
import random
from fractions import Fraction

import numpy as np

from powerslab.util.testing import run_tests_if_main, raises, approx

from powerslab.romanov import (RomanovConfig, ConfigError, valid_alphas,
                               class_T, class_D, class_stats, divisors,
                               pintz_density_factor, popcount)
from powerslab.romanov._classes import (class_masks, coprime_table,
                                        shift_pair_counts)


def synthetic_config(m, C1=3.0):
    S_table = {t: 1 + 0.01 * t for t in divisors(m)}
    return RomanovConfig(C1, m, C3=2.0, S_table=S_table)


def test_config():
    config = RomanovConfig(4.0)
    assert config.m == 24
    assert config.ell == 2 ** 24 - 1
    assert config.phi_ell == 6635520
    assert config.S(0) == config.S_table[24]
    assert config.S(5) == config.S_table[1]
    assert config.S(-6) == config.S_table[6]
    assert config.with_C1(2.0).C1 == 2.0
    assert config.as_dict()['S_table']['24'] == 1.14370


def test_config_errors():
    with raises(ConfigError):
        RomanovConfig(3.0, m=12)
    with raises(ConfigError):
        RomanovConfig(3.0, m=12, S_table={t: 1.0 for t in divisors(12)})
    with raises(ConfigError):
        RomanovConfig(3.0, m=6, C3=2.0, S_table={1: 1.0, 2: 1.0, 3: 1.0})
    with raises(ConfigError):
        RomanovConfig(3.0, m=4, C3=2.0,
                      S_table={1: 1.0, 2: 1.0, 3: 1.0, 4: 1.0})
    with raises(ValueError):
        RomanovConfig(3.0, m=31)
    with raises(ValueError):
        RomanovConfig(3.0, m=1)
    with raises(ValueError):
        RomanovConfig(0.0)


def test_valid_alphas_m2():
    config = synthetic_config(2)
    assert config.ell == 3
    assert valid_alphas(0, config) == 0b11
    assert valid_alphas(1, config) == 0b10
    assert valid_alphas(2, config) == 0b01
    with raises(ValueError):
        valid_alphas(3, config)
    with raises(ValueError):
        valid_alphas(-1, config)


def test_class_masks_match_scalar():
    for m in (3, 4, 6, 8):
        config = synthetic_config(m)
        coprime = coprime_table(config.ell, config.ell_factors.primes)
        ks = np.arange(config.ell, dtype=np.int64)
        masks = class_masks(ks, m, coprime)
        for k in range(config.ell):
            assert int(masks[k]) == valid_alphas(k, config)


def test_popcount():
    values = [0, 1, 2, 3, 255, 256, 2 ** 30 - 1, 2 ** 63 + 5]
    result = popcount(np.array(values, dtype=np.uint64))
    assert result.tolist() == [bin(v).count('1') for v in values]


def test_shift_pair_counts():
    m = 6
    rng = random.Random(3)
    masks = [rng.randrange(1 << m) for i in range(50)]
    counts = shift_pair_counts(np.array(masks, dtype=np.uint64), m)
    for i, mask in enumerate(masks):
        alphas = [a for a in range(m) if mask >> a & 1]
        for delta in range(m):
            expected = sum(1 for a1 in alphas for a2 in alphas
                           if (a1 - a2) % m == delta)
            assert counts[i, delta] == expected


def test_class_T_examples():
    config = RomanovConfig(4.0)
    S = config.S_table
    assert class_T(0, config) == 0
    assert class_T(1 << 5, config) == approx(S[24])
    assert class_T(0b11, config) == approx(2 * S[24] + 2 * S[1])
    # alphas 0 and 12 differ by 12 both ways
    assert class_T(1 | 1 << 12, config) == approx(2 * S[24] + 2 * S[12])


def test_class_T_bounds():
    config = RomanovConfig(4.0)
    lo, hi = min(config.S_table.values()), max(config.S_table.values())
    rng = random.Random(7)
    for i in range(200):
        mask = rng.randrange(1, 1 << 24)
        N1 = bin(mask).count('1')
        T = class_T(mask, config)
        assert N1 * config.S_table[24] <= T + 1e-9
        assert N1 * N1 * lo - 1e-9 <= T <= N1 * N1 * hi + 1e-9


def test_density_factor():
    assert pintz_density_factor(2.5) == approx(5 / 12)
    assert pintz_density_factor(1) == 1
    assert pintz_density_factor(3) == approx(1 / 3)
    for D in (1.1, 1.5, 2.25, 3.7, 10.01):
        assert pintz_density_factor(D) > 1 / D
    with raises(ValueError):
        pintz_density_factor(0.5)


def test_density_factor_bounds_share():
    # A nonnegative integer sequence with sum b = M and sum b^2 = D M has
    # at least f(D) M positive entries
    rng = random.Random(11)
    for i in range(10000):
        b = [rng.randint(0, 5) for j in range(rng.randint(1, 50))]
        M = sum(b)
        if M == 0:
            continue
        D = Fraction(sum(x * x for x in b), M)
        positive = sum(1 for x in b if x > 0)
        assert positive >= pintz_density_factor(float(D)) * M - 1e-9


def test_class_D_linear_in_C1():
    base = RomanovConfig(1.0)
    stats = class_stats(12345, base)
    assert stats.N1 > 0
    for C1 in (2.0, 3.02, 7.8209):
        config = base.with_C1(C1)
        assert class_D(stats, config) - 1 == \
            approx(C1 * (class_D(stats, base) - 1), rel=1e-12)


def test_class_stats():
    config = synthetic_config(2)
    stats = class_stats(0, config)
    assert stats.alpha_mask == 0b11
    assert stats.N1 == 2
    assert stats.T == approx(2 * config.S_table[2] + 2 * config.S_table[1])
    assert stats.D == approx(class_D(stats, config))
    assert stats.f_D == approx(pintz_density_factor(stats.D))
    expected = stats.f_D * 2 / (config.phi_ell * 2 * math.log(2))
    assert stats.share == approx(expected, rel=1e-12)
    assert 'N1=2' in repr(stats)


run_tests_if_main()
