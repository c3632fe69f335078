import csv
import math
import random

import numpy as np

from powerslab.util.testing import (run_tests_if_main, raises, approx,
                                    config_options)

from powerslab.romanov import (RomanovConfig, divisors, density_lower_bound,
                               get_mask_statistics, pintz_threshold,
                               pintz_density_factor, make_romanov_table,
                               PUBLISHED_D, TABLE_C1, K2_C1, K2_DENSITY)
from powerslab.romanov._density import compute_mask_statistics


def synthetic_config(m, C1=3.0, seed=0):
    rng = random.Random(seed)
    S_table = {t: 1 + rng.random() / 5 for t in divisors(m)}
    return RomanovConfig(C1, m, C3=2.5, S_table=S_table)


def brute_force_density(config):
    m, ell = config.m, config.ell
    total = 0.0
    for k in range(ell):
        alphas = [a for a in range(m)
                  if math.gcd((k - 2 ** a) % ell, ell) == 1]
        if not alphas:
            continue
        T = sum(config.S_table[math.gcd(a1 - a2, m)]
                for a1 in alphas for a2 in alphas)
        D = 1 + (config.C0.hi * config.C1 * config.C3 * T /
                 (m * math.log(2) * len(alphas)))
        total += pintz_density_factor(D) * len(alphas)
    return total / (config.phi_ell * m * math.log(2))


def test_mass_identity():
    for m in (2, 3, 4, 6, 8, 12):
        config = synthetic_config(m)
        stats = get_mask_statistics(config)
        assert stats.total_N1() == config.phi_ell * m
        assert int(stats.counts.sum()) == config.ell


def test_matches_brute_force():
    for m in (2, 3, 4, 6):
        for seed in range(3):
            config = synthetic_config(m, C1=2.0 + seed, seed=seed)
            result = density_lower_bound(config)
            # The rounding of log 2 moves the bound by a few ulps at most
            assert result.d_lower == approx(brute_force_density(config),
                                            rel=1e-12)


def test_memoize_transparent():
    for m in (6, 8, 10):
        config = synthetic_config(m)
        a = density_lower_bound(config, memoize=True)
        b = density_lower_bound(config, memoize=False)
        assert a.d_lower == approx(b.d_lower, rel=1e-12)
        assert a.class_count_nonzero == b.class_count_nonzero
        assert b.distinct_masks is None


def test_worker_invariance():
    config = synthetic_config(12)
    with config_options(chunk_bits=8):
        single = compute_mask_statistics(config, workers=1)
        multi = compute_mask_statistics(config, workers=2)
    assert np.array_equal(single.masks, multi.masks)
    assert np.array_equal(single.counts, multi.counts)
    whole = compute_mask_statistics(config, workers=1, chunk_bits=20)
    assert np.array_equal(single.masks, whole.masks)
    assert np.array_equal(single.counts, whole.counts)


def test_monotonic_in_C1():
    config = synthetic_config(8)
    values = [density_lower_bound(config.with_C1(C1)).d_lower
              for C1 in (2.0, 3.0, 4.0, 8.0)]
    assert values == sorted(values, reverse=True)
    assert len(set(values)) == len(values)

    # Raising S(m) raises D in every non-empty class
    bigger = dict(config.S_table)
    bigger[8] += 0.1
    other = RomanovConfig(config.C1, 8, config.C3, bigger)
    assert density_lower_bound(other).d_lower < \
        density_lower_bound(config).d_lower


def test_per_class_csv(tmpdir):
    config = synthetic_config(6)
    filename = str(tmpdir.join('classes.csv'))
    result = density_lower_bound(config, per_class_csv=filename)
    with open(filename) as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ['alpha_mask', 'N1', 'T', 'D', 'f_D', 'classes',
                       'share_total']
    assert len(rows) - 1 == result.distinct_masks
    assert sum(int(row[5]) for row in rows[1:]) == config.ell
    total = math.fsum(float(row[6]) for row in rows[1:])
    assert total == approx(result.d_lower, rel=1e-9)
    with raises(ValueError):
        density_lower_bound(config, memoize=False, per_class_csv=filename)


def test_result_dict():
    result = density_lower_bound(synthetic_config(4))
    d = result.as_dict()
    assert d['m'] == 4 and d['ell'] == 15
    assert d['d_lower'] == result.d_lower
    assert d['class_count_nonzero'] == 15
    assert 'd_lower' in repr(result)


def test_pintz_threshold():
    assert pintz_threshold(0.25007) == 2
    assert pintz_threshold(0.25007, 3) == 6
    assert pintz_threshold(0.25) is None
    assert pintz_threshold(0.1) is None
    with raises(ValueError):
        pintz_threshold(0.6)
    with raises(ValueError):
        pintz_threshold(-0.1)
    with raises(ValueError):
        pintz_threshold(0.3, 0)


def test_published_bounds():
    assert K2_C1 == 3.02 and K2_DENSITY == 0.25007
    config = RomanovConfig(K2_C1)
    stats = get_mask_statistics(config)
    assert stats.total_N1() == config.phi_ell * 24
    for C1 in TABLE_C1:
        result = density_lower_bound(config.with_C1(C1))
        assert abs(result.d_lower - PUBLISHED_D[C1]) <= 2e-4


def test_romanov_table():
    table = make_romanov_table()
    assert table.column_names == ['C1', 'd_lower', 'published',
                                  'class_count_nonzero', 'pintz_K']
    assert table.column('C1') == list(TABLE_C1)
    assert table.column('pintz_K') == ['', '', '', '', '2', '2']
    assert table.meta['params'] == dict(m=24)


run_tests_if_main()
