#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Copyright (C) 2026, schurweylpy developers
# Full license can be found in License.md
# -----------------------------------------------------------------------------
"""Command-line front end

Every subcommand but verify-all builds an ExperimentConfig from an optional
``--config`` file overridden by flags, runs it and appends the reports to
``--output``.  Exit codes: 0 all reports pass, 1 usage or configuration
error, 2 a report failed, 3 numerical error.  verify-all also prints its
wall-clock time next to the runtime budget.

Functions
-------------------------------------------------------------------------------
build_parser()
    argparse parser with one subparser per experiment
main(argv=None)
    Entry point of the ``schurweylpy`` console script
-------------------------------------------------------------------------------
"""
import argparse
import logging
import sys

from schurweylpy._core import (CRITERIA, EXPERIMENT_KEYS, ExperimentConfig,
                               run_experiment, verify_all)
from schurweylpy.reports import summary_table, write_reports
from schurweylpy.utils import ConfigError, NumericalError, read_config

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_USAGE = 1
EXIT_FAILED = 2
EXIT_NUMERICAL = 3

FLAG_HELP = {
    'n': 'number of copies / word length',
    'd': 'dimension; must match the length of alpha',
    'alpha': "spectrum, e.g. '0.6,0.4' or '3/5,2/5'",
    'beta': 'spectrum majorizing alpha',
    'k': 'number of leading rows or principal components',
    'reps': 'Monte Carlo replicas',
    'inner': 'Keyl draws per distinct outer shape',
    'draws': 'Keyl draws per identity',
    'lam': "Young diagram, e.g. '4,2,1'",
    'unitary_seed': 'seed of the random eigenbasis of rho',
}


class _Parser(argparse.ArgumentParser):
    """ArgumentParser raising ConfigError instead of exiting"""

    def error(self, message):
        raise ConfigError(message)


def _add_common(parser):
    parser.add_argument('--seed', help='base seed (mandatory)')
    parser.add_argument('--workers', type=int, default=1,
                        help='worker processes for replicas')
    parser.add_argument('--output', default='report.jsonl',
                        help='JSON-lines report file, appended to')
    parser.add_argument('--csv-output', default=None,
                        help='CSV mirror of the report file')
    parser.add_argument('--verbose', action='store_true',
                        help='log at INFO instead of WARNING')


def build_parser():
    """Parser for all subcommands

    Returns
    -------
    parser : (argparse.ArgumentParser)
    """
    parser = _Parser(prog='schurweylpy',
                     description='Schur-Weyl spectrum estimation experiments')
    subparsers = parser.add_subparsers(dest='command',
                                       parser_class=_Parser)
    subparsers.required = True
    for experiment, keys in EXPERIMENT_KEYS.items():
        sub = subparsers.add_parser(experiment)
        _add_common(sub)
        sub.add_argument('--config', default=None,
                         help='key = value experiment file')
        sub.add_argument('--tag', default=None,
                         help='collection name for the archive path')
        sub.add_argument('--archive', action='store_true',
                         help='archive the run under the archive directory')
        for key in sorted(keys):
            if key == 'use_rank':
                sub.add_argument('--use-rank', dest='use_rank',
                                 action='store_const', const=True,
                                 default=None,
                                 help='estimate with the rank r, not d')
            else:
                sub.add_argument('--' + key.replace('_', '-'), dest=key,
                                 default=None, help=FLAG_HELP[key])

    verify = subparsers.add_parser('verify-all')
    _add_common(verify)
    verify.set_defaults(seed='0')
    verify.add_argument('--quick', action='store_true',
                        help='smaller grid and fewer replicas')
    verify.add_argument('--corrupt', type=float, default=None,
                        help='scale Monte Carlo bounds by this factor')
    verify.add_argument('--criteria', default=None,
                        help='comma list out of ' + ', '.join(CRITERIA))
    return parser


def _config_from_args(args):
    mapping = read_config(args.config) if args.config else {}
    named = mapping.pop('experiment', args.command)
    if named != args.command:
        raise ConfigError('{} describes experiment {!r}'.format(args.config,
                                                                named))
    overrides = {key: getattr(args, key)
                 for key in EXPERIMENT_KEYS[args.command] | {'seed', 'tag'}}
    mapping.update({key: value for key, value in overrides.items()
                    if value is not None})
    return ExperimentConfig.from_mapping(args.command, mapping)


def _run(args):
    if args.command == 'verify-all':
        try:
            seed = int(args.seed)
        except ValueError:
            raise ConfigError('seed must be an integer')
        criteria = None
        if args.criteria:
            criteria = [name.strip() for name in args.criteria.split(',')]
        timings = {}
        reports = verify_all(seed=seed, quick=args.quick,
                             corrupt=args.corrupt, criteria=criteria,
                             workers=args.workers, timings=timings)
        write_reports(reports, args.output, csv_path=args.csv_output)
        print('verify-all: {} reports in {:.1f} s (budget {:.0f} s)'.format(
            len(reports), timings['elapsed'], timings['budget']))
    else:
        config = _config_from_args(args)
        reports = run_experiment(config, workers=args.workers,
                                 archive=args.archive, output=args.output,
                                 csv_output=args.csv_output)
    return reports


def main(argv=None):
    """Run the command line and return the exit code

    Parameters
    ----------
    argv : (list of str or NoneType)
        arguments without the program name; sys.argv[1:] when None
        (default=None)

    Returns
    -------
    code : (int)
        0 all pass, 1 usage error, 2 a report failed, 3 numerical error
    """
    argv = sys.argv[1:] if argv is None else list(argv)
    level = logging.INFO if '--verbose' in argv else logging.WARNING
    logging.basicConfig(level=level,
                        format='%(asctime)s %(name)s %(levelname)s: '
                               '%(message)s')
    try:
        args = build_parser().parse_args(argv)
        reports = _run(args)
    except NumericalError as err:
        print('numerical error: {}'.format(err), file=sys.stderr)
        return EXIT_NUMERICAL
    except (ValueError, TypeError, NameError) as err:
        print('error: {}'.format(err), file=sys.stderr)
        return EXIT_USAGE

    print(summary_table(reports).to_string(index=False))
    if not all(report.passed for report in reports):
        return EXIT_FAILED
    return EXIT_PASS
