# fmt: off
from .util.config import Config

config = Config('powerslab', '~appdata/.powerslab.cfg',

        # General
        log_level=('warning', str,
                   'The log level to use (DEBUG, INFO, WARNING, ERROR)'),
        cache_dir=('', str, 'Directory for the factorization cache. '
                   'Empty means <appdata>/powerslab.'),
        workers=(0, int, 'Number of worker processes. Zero means all cores.'),

        # powerslab.arith
        prime_limit=(10**7, int, 'Prime cut-off for the twin-prime constant product.'),

        # powerslab.spectra
        ak_truncation=((), [int], 'Default truncation L for k = 1, 2, 3, 4, '
                       'e.g. "64,48,32,24" for the caps. Empty means '
                       '64,24,24,24.'),

        # powerslab.linnik
        epsilon=(1e-10, float, 'The small epsilon in the unconditional cut-off term.'),
        bisect_tol=(1e-6, float, 'Tolerance of the C1 bisection.'),

        # powerslab.empirical
        sieve_cap=(10**8, int, 'Largest limit accepted by the prime sieve.'),

        # powerslab.romanov
        chunk_bits=(20, int, 'Residue classes are processed in blocks of '
                    '2**chunk_bits.'),

        )


def get_cache_dir():
    """ Get the directory of the factorization cache (not created here).
    """
    import os
    from .util.config import appdata_dir
    if config.cache_dir:
        return os.path.expanduser(config.cache_dir)
    return appdata_dir('powerslab')
