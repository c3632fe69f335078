"""
powerslab has a command line interface to reproduce its tables and run
single computations. Invoke it via ``python -m powerslab`` or
``powerslab``. Each invocation writes a single document to stdout, in the
format given by ``--format`` (json, csv or md); log messages go to stderr.

Global options (anywhere on the command line):
``--format``, ``--workers``, ``--cache-dir``, ``--log-level``.
Additional ``--powerslab-<option>=value`` arguments configure powerslab,
see :obj:`powerslab.config`.

Exit codes: 0 on success, 1 for invalid arguments, 2 when a computation
or configuration fails.

.. code-block:: none

"""

import sys
import time
import argparse

ALIASES = {'-h': 'help', '--help': 'help',
           '--version': 'version',
           }

GLOBAL_OPTIONS = ('format', 'workers', 'cache_dir', 'log_level')


class UsageError(Exception):
    """ Raised for invalid command line arguments.
    """
    pass


class ArgumentParser(argparse.ArgumentParser):
    """ ArgumentParser that raises UsageError instead of exiting.
    """

    def error(self, message):
        raise UsageError('%s: %s' % (self.prog, message))

    def exit(self, status=0, message=None):
        raise UsageError(message or 'invalid arguments')


def _int(value):
    from .util.config import as_int
    try:
        return as_int(value)
    except ValueError:
        raise argparse.ArgumentTypeError('invalid int value: %r' % value)


def _int_list(value):
    return [_int(v) for v in value.split(',') if v.strip()]


def _s_table(value):
    # "1:1.01609,2:1.04568,..."
    table = {}
    for item in value.split(','):
        if not item.strip():
            continue
        try:
            t, s = item.split(':')
            table[int(t)] = float(s)
        except ValueError:
            raise argparse.ArgumentTypeError('invalid S-table entry %r' % item)
    return table


def _global_parser():
    parser = ArgumentParser(prog='powerslab', add_help=False,
                            allow_abbrev=False)
    parser.add_argument('--format', default='json',
                        choices=('json', 'csv', 'md'))
    parser.add_argument('--workers', type=_int, default=None)
    parser.add_argument('--cache-dir', default=None)
    parser.add_argument('--log-level', default=None)
    return parser


class CLI:
    """ Command line interface class. Commands are simply defined as methods.
    Each command returns the document to write to stdout.
    """

    def __init__(self, args=None):
        self.output = ''
        self.format = 'json'
        self.cache = None
        if args is None:
            return

        # --powerslab-xx=yy arguments were consumed by the config
        args = [a for a in args if not a.startswith('--powerslab-')]
        options, args = _global_parser().parse_known_args(args)
        self._apply_global_options(options)

        command = args[0] if args else 'help'
        command = ALIASES.get(command, command)

        if command not in self.get_command_names():
            raise UsageError('Invalid command %r' % command)

        func = getattr(self, 'cmd_' + command)
        try:
            self.output = func(*args[1:])
        finally:
            if self.cache is not None:
                self.cache.flush()

    def _apply_global_options(self, options):
        from . import config, set_log_level
        self.format = options.format
        if options.workers is not None:
            config.workers = options.workers
        if options.cache_dir is not None:
            config.cache_dir = options.cache_dir
        if options.log_level is not None:
            config.log_level = options.log_level
            set_log_level(options.log_level)

    def get_cache(self):
        """ The factorization cache of this invocation, flushed on exit.
        """
        if self.cache is None:
            from ._config import get_cache_dir
            from .arith import FactorCache
            self.cache = FactorCache(get_cache_dir())
        return self.cache

    def get_command_names(self):
        commands = [d[4:] for d in dir(self) if d.startswith('cmd_')]
        commands.sort()
        return commands

    def get_global_help(self):
        lines = []
        lines.append('powerslab command line interface')
        lines.append('  python -m powerslab <command> [args] [--format fmt]')
        lines.append('')
        for command in self.get_command_names():
            doc = getattr(self, 'cmd_' + command).__doc__
            if doc:
                summary = doc.strip().splitlines()[0]
                lines.append('%s %s' % (command.ljust(15), summary))
        return '\n'.join(lines)

    def _emit_table(self, table):
        from .report import serialize
        return serialize(table, self.format)

    def _emit_record(self, record, title):
        from .report import serialize_record
        return serialize_record(record, self.format, title)

    def cmd_help(self, command=None):
        """ show information on how to use this command.
        """
        if command:
            command = ALIASES.get(command, command)
            if command not in self.get_command_names():
                raise UsageError('Invalid command %r' % command)
            doc = getattr(self, 'cmd_' + command).__doc__
            if doc:
                lines = doc.strip().splitlines()
                doc = '\n'.join([lines[0]] + [line[8:] for line in lines[1:]])
                return '%s - %s\n' % (command, doc)
            return '%s - no docs\n' % command
        return self.get_global_help() + '\n'

    def cmd_version(self):
        """ print the version number
        """
        from . import __version__
        return __version__ + '\n'

    def cmd_constants(self, *args):
        """ show the constants: C0, R0, c1, the A(k) brackets, phi(2^24-1).
        powerslab constants [--prime-limit N]
        Without --prime-limit the shipped C0 enclosure is reported.
        """
        from .arith import compute_C0, factorize, euler_phi
        from .linnik import LinnikConstants
        parser = ArgumentParser(prog='powerslab constants')
        parser.add_argument('--prime-limit', type=_int, default=None)
        ns = parser.parse_args(args)
        t0 = time.perf_counter()
        C0 = compute_C0(ns.prime_limit) if ns.prime_limit else None
        record = LinnikConstants(C0=C0).as_dict()
        ell = 2 ** 24 - 1
        factors = factorize(ell, self.get_cache())
        record['prime_limit'] = ns.prime_limit
        record['phi_2_24_minus_1'] = euler_phi(factors)
        record['factors_2_24_minus_1'] = str(factors).split(': ', 1)[1]
        record['runtime_ms'] = int(1000 * (time.perf_counter() - t0))
        return self._emit_record(record, 'constants')

    def cmd_ak(self, *args):
        """ estimate A(k) from the truncated power-sum correlation.
        powerslab ak --k K [--L L]
        """
        from .spectra import estimate_Ak
        parser = ArgumentParser(prog='powerslab ak')
        parser.add_argument('--k', type=_int, required=True)
        parser.add_argument('--L', type=_int, default=None)
        ns = parser.parse_args(args)
        est = estimate_Ak(ns.k, ns.L, cache=self.get_cache())
        record = est.as_dict()
        record['runtime_ms'] = est.runtime_ms
        return self._emit_record(record, 'A(%i)' % ns.k)

    def cmd_linnik(self, action=None, *args):
        """ evaluate the admissibility criterion for K powers of two.
        powerslab linnik check --K K --c1 C1 [--grh] [--theta t]
        powerslab linnik table
        """
        from .linnik import criterion_lhs, make_linnik_table
        if action == 'table':
            parser = ArgumentParser(prog='powerslab linnik table')
            parser.add_argument('--tol', type=float, default=None)
            ns = parser.parse_args(args)
            return self._emit_table(make_linnik_table(tol=ns.tol))
        elif action == 'check':
            parser = ArgumentParser(prog='powerslab linnik check')
            parser.add_argument('--K', type=_int, required=True)
            parser.add_argument('--c1', type=float, required=True)
            parser.add_argument('--grh', action='store_true')
            parser.add_argument('--theta', type=float, default=None)
            ns = parser.parse_args(args)
            t0 = time.perf_counter()
            result = criterion_lhs(ns.K, ns.c1, ns.grh, theta=ns.theta)
            record = result.as_dict()
            record['runtime_ms'] = int(1000 * (time.perf_counter() - t0))
            return self._emit_record(record, 'criterion')
        raise UsageError('linnik needs an action: check or table')

    def cmd_romanov(self, action=None, *args):
        """ compute lower bounds for the density of the integers p + 2^a.
        powerslab romanov bound --c1 C1 [--m 24] [--c3 C3]
            [--s-table 1:s1,2:s2,...] [--per-class-csv PATH] [--no-memo]
        powerslab romanov table [--m 24]
        """
        from .romanov import (RomanovConfig, density_lower_bound,
                              make_romanov_table, pintz_threshold)
        from . import config
        if action == 'table':
            parser = ArgumentParser(prog='powerslab romanov table')
            parser.add_argument('--m', type=_int, default=24)
            ns = parser.parse_args(args)
            return self._emit_table(make_romanov_table(ns.m, config.workers))
        elif action == 'bound':
            parser = ArgumentParser(prog='powerslab romanov bound')
            parser.add_argument('--c1', type=float, required=True)
            parser.add_argument('--m', type=_int, default=24)
            parser.add_argument('--c3', type=float, default=None)
            parser.add_argument('--s-table', type=_s_table, default=None)
            parser.add_argument('--per-class-csv', default=None)
            parser.add_argument('--no-memo', action='store_true')
            ns = parser.parse_args(args)
            rconfig = RomanovConfig(ns.c1, ns.m, ns.c3, ns.s_table)
            result = density_lower_bound(rconfig, config.workers,
                                         not ns.no_memo, ns.per_class_csv)
            record = result.as_dict()
            record['S_table'] = ' '.join('%s:%s' % item for item in
                                         record['S_table'].items())
            d = min(max(result.d_lower, 0.0), 0.5)
            record['pintz_K'] = pintz_threshold(d)
            return self._emit_record(record, 'density bound')
        raise UsageError('romanov needs an action: bound or table')

    def cmd_empirical(self, action=None, *args):
        """ brute-force counts at desk scale.
        powerslab empirical romanov --limit N [--k-powers k]
            [--checkpoints a,b,c]
        powerslab empirical goldbach --n N
        powerslab empirical goldbach --sample s --min A --max B [--seed x]
        powerslab empirical gaps --n N --h h [--mod ell --res k]
        powerslab empirical linnik2 --lo A --hi B [--k-powers k]
        """
        func = getattr(self, '_empirical_' + str(action), None)
        if func is None:
            raise UsageError('empirical needs an action: romanov, goldbach, '
                             'gaps or linnik2')
        return func(args)

    def _empirical_romanov(self, args):
        from .empirical import density_profile
        from .report import ReportTable
        parser = ArgumentParser(prog='powerslab empirical romanov')
        parser.add_argument('--limit', type=_int, required=True)
        parser.add_argument('--k-powers', type=_int, default=1)
        parser.add_argument('--checkpoints', type=_int_list, default=None)
        ns = parser.parse_args(args)
        t0 = time.perf_counter()
        profile = density_profile(ns.limit, ns.k_powers, ns.checkpoints)
        table = ReportTable('Density of p + %i powers of two' % ns.k_powers,
                            [('N', 'int'), ('count', 'int'), ('d', 'real')])
        for (Ni, d), count in zip(profile.d_values, profile.counts):
            table.add_row([Ni, count, d], 'heuristic')
        table.meta.update(self._meta(t0), params=dict(limit=ns.limit,
                                                      k_powers=ns.k_powers))
        return self._emit_table(table)

    def _empirical_goldbach(self, args):
        import random
        from .arith import sieve_primes
        from .empirical import goldbach_G, hl_ratio
        from .empirical._goldbach import HL_MIN_N
        from .report import ReportTable
        parser = ArgumentParser(prog='powerslab empirical goldbach')
        parser.add_argument('--n', type=_int, default=None)
        parser.add_argument('--sample', type=_int, default=None)
        parser.add_argument('--min', type=_int, default=None)
        parser.add_argument('--max', type=_int, default=None)
        parser.add_argument('--seed', type=_int, default=0)
        ns = parser.parse_args(args)
        t0 = time.perf_counter()
        if ns.n is not None:
            values = [ns.n]
        elif ns.sample and ns.min is not None and ns.max is not None:
            if ns.max < ns.min + 2:
                raise UsageError('--max must exceed --min')
            rng = random.Random(ns.seed)
            values = sorted(2 * rng.randrange((ns.min + 1) // 2, ns.max // 2 + 1)
                            for i in range(ns.sample))
        else:
            raise UsageError('give --n, or --sample with --min and --max')
        sieve = sieve_primes(max(values))
        table = ReportTable('Goldbach pair counts',
                            [('N', 'int'), ('G', 'int'), ('hl_ratio', 'real')])
        for N in values:
            ratio = hl_ratio(N, sieve) if N >= HL_MIN_N and N % 2 == 0 else None
            table.add_row([N, goldbach_G(N, sieve), ratio], 'heuristic')
        table.meta.update(self._meta(t0), params=dict(seed=ns.seed))
        return self._emit_table(table)

    def _empirical_gaps(self, args):
        from .empirical import gap_count
        parser = ArgumentParser(prog='powerslab empirical gaps')
        parser.add_argument('--n', type=_int, required=True)
        parser.add_argument('--h', type=_int, required=True)
        parser.add_argument('--mod', type=_int, default=1)
        parser.add_argument('--res', type=_int, default=1)
        ns = parser.parse_args(args)
        t0 = time.perf_counter()
        count = gap_count(ns.n, ns.h, ns.res, ns.mod)
        record = dict(N=ns.n, h=ns.h, ell=ns.mod, k=ns.res, R=count)
        record.update(self._meta(t0))
        return self._emit_record(record, 'prime pairs with gap %i' % ns.h)

    def _empirical_linnik2(self, args):
        from .empirical import scan_k2_decompositions
        parser = ArgumentParser(prog='powerslab empirical linnik2')
        parser.add_argument('--lo', type=_int, default=8)
        parser.add_argument('--hi', type=_int, required=True)
        parser.add_argument('--k-powers', type=_int, default=1)
        ns = parser.parse_args(args)
        t0 = time.perf_counter()
        result = scan_k2_decompositions(ns.lo, ns.hi, k_powers=ns.k_powers)
        record = result.as_dict()
        record.update(self._meta(t0))
        return self._emit_record(record, 'two primes and 2k powers of two')

    def _meta(self, t0):
        from . import __version__
        return dict(version=__version__,
                    runtime_ms=int(1000 * (time.perf_counter() - t0)))


def main(argv=None):
    """ Run the command line interface and return the exit code.
    """
    from . import config, set_log_level
    from .romanov import ConfigError
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        cli = CLI(argv)
    except (UsageError, ValueError) as err:
        sys.stderr.write('powerslab: error: %s\n' % err)
        return 1
    except (ConfigError, RuntimeError, OSError, ArithmeticError) as err:
        sys.stderr.write('powerslab: failed: %s\n' % err)
        return 2
    finally:
        for name in GLOBAL_OPTIONS[1:]:
            config.reset(name)
        set_log_level(config.log_level)
    sys.stdout.write(cli.output)
    return 0


run = main


# Prepare docs
_cli_docs = CLI().get_global_help().splitlines()
__doc__ += '\n'.join(['    ' + line for line in _cli_docs])


if __name__ == '__main__':
    sys.exit(main())
