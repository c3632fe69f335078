from powerslab.util.testing import raises, run_tests_if_main, config_options

import os
import sys

from powerslab import config
from powerslab.util.config import Config, as_int, as_bool, appdata_dir
from powerslab._config import get_cache_dir


SAMPLE_FLAT = """

workers = 4
prime_limit = 1e6
epsilon = 1e-12
log_level = info

[other]
workers = 9

"""

SAMPLE_SECTION = """

[labconfig]

workers = 2
prime_limit = 10_000
epsilon = 1e-11

"""

SAMPLE_BROKEN = """

<not an ini file

:: -=

"""


def make_config(*sources):
    return Config('labconfig', *sources,
                  workers=(0, int, 'worker count'),
                  prime_limit=(10 ** 7, int, 'prime cut-off'),
                  epsilon=(1e-10, float, 'cut-off epsilon'),
                  log_level=('warning', str, 'log level'),
                  grh=(False, bool, 'assume GRH'),
                  ks=((1, 2), (int, ), 'values of k'))


def test_converters():
    assert as_int('1e7') == 10 ** 7
    assert as_int('10_000_000') == 10 ** 7
    assert as_int(' 42 ') == 42
    assert as_int(3.0) == 3
    with raises(ValueError):
        as_int('1.5e0')
    with raises(ValueError):
        as_int(2.5)
    assert as_bool('Yes') is True
    assert as_bool('off') is False
    with raises(ValueError):
        as_bool('maybe')


def test_names():
    assert len(Config('aa')) == 0
    with raises(ValueError):
        Config('0aa')
    with raises(ValueError):
        Config('_aa')
    with raises(ValueError):
        Config('aa', _workers=(3, int, ''))
    for spec in [(3, int), (3, int, 'docs', None), (3, None, 'docs'),
                 ('', set, 'docs'), ('3,3', [int, int], 'docs')]:
        with raises(ValueError):
            Config('aa', foo=spec)


def test_defaults_and_docs():
    c = make_config()
    assert len(c) == 6
    assert set(dir(c)) == set(c)
    assert c.workers == 0
    assert c.prime_limit == 10 ** 7
    assert c.grh is False
    assert c.ks == (1, 2)
    assert 'prime_limit (int): ' in c.__doc__
    assert 'ks (int-tuple): ' in c.__doc__
    assert c.__doc__.find('epsilon') < c.__doc__.find('workers')


def test_sources(tmpdir):
    filename = str(tmpdir.join('lab.cfg'))
    with open(filename, 'wb') as f:
        f.write(SAMPLE_FLAT.encode())
    broken = str(tmpdir.join('broken.cfg'))
    with open(broken, 'wb') as f:
        f.write(b'\x00\xff')

    c = make_config(filename)
    assert c.workers == 4
    assert c.prime_limit == 10 ** 6
    assert c.epsilon == 1e-12
    assert c.log_level == 'info'

    c = make_config(SAMPLE_SECTION)
    assert c.workers == 2
    assert c.prime_limit == 10000

    # Later sources win, missing files are ignored
    c = make_config(filename, filename + '.nope', SAMPLE_SECTION)
    assert c.workers == 2
    assert c.log_level == 'info'

    # Broken sources are logged and ignored
    c = make_config(SAMPLE_BROKEN, broken)
    assert c.workers == 0

    with raises(ValueError):
        make_config(3)


def test_priority(tmpdir):
    filename = str(tmpdir.join('lab.cfg'))
    with open(filename, 'wb') as f:
        f.write(SAMPLE_FLAT.encode())

    os.environ['LABCONFIG_WORKERS'] = '6'
    old_argv = sys.argv
    sys.argv = ['', '--labconfig-prime-limit=1e5', '--labconfig-epsilon', '3']
    try:
        c = make_config(filename)
    finally:
        sys.argv = old_argv
        del os.environ['LABCONFIG_WORKERS']

    assert c.workers == 6  # environ over file
    assert c.prime_limit == 10 ** 5  # argv over file
    assert c.epsilon == 1e-12  # argv needs the equals sign

    c.workers = 1
    assert c.workers == 1
    c.load_from_string(SAMPLE_SECTION)
    assert c.workers == 1  # set over file
    c.reset('workers')
    assert c.workers == 6
    assert 'environ' in str(c)


def test_access():
    c = make_config()
    c['WORKERS'] = 3
    assert c.workers == 3
    assert c['Workers'] == 3
    assert c.as_dict()['workers'] == 3
    with raises(ValueError):
        c.workers = 'many'
    with raises(AttributeError):
        c.WORKERS
    with raises(TypeError):
        c[3]
    with raises(IndexError):
        c['nope']
    with raises(IndexError):
        c['nope'] = 3
    assert 'labconfig' in repr(c)
    assert ' -> 3 from set' in str(c)


def test_powerslab_config():
    assert config.epsilon > 0
    assert config.chunk_bits >= 1
    old = config.cache_dir
    with config_options(cache_dir='~/somewhere'):
        assert get_cache_dir() == os.path.expanduser('~/somewhere')
    assert config.cache_dir == old
    if not old:
        assert get_cache_dir() == appdata_dir('powerslab')
    assert appdata_dir('x').endswith('x')


def test_config_options_are_dropped_on_error():
    workers, bits = config.workers, config.chunk_bits
    with raises(ZeroDivisionError):
        with config_options(workers=3, chunk_bits='12'):
            assert config.workers == 3 and config.chunk_bits == 12
            1 / 0
    assert (config.workers, config.chunk_bits) == (workers, bits)
    with raises(ValueError):
        with config_options(workers='many'):
            pass
    assert config.workers == workers


run_tests_if_main()
