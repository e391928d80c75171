#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Copyright (C) 2026, schurweylpy developers
# Full license can be found in License.md
# -----------------------------------------------------------------------------
"""Archive paths, experiment config files, errors and replica streams

Classes
-------------------------------------------------------------------------------
NumericalError
    Numerical failure: exhausted sampler, zero weights, non-PSD input
ConfigError
    Invalid experiment configuration

Functions
-------------------------------------------------------------------------------
generate_path(tag, experiment, seed, test=False)
    Generates path to an archived experiment run
set_archive_dir(path=None, store=True)
    Allows user to specify the location where experiment runs are stored
read_config(path), write_config(path, params)
    Plain ``key = value`` experiment files
parse_vector(text)
    Comma-separated floats or rationals
replica_rng(seed, index)
    Independent random stream for one replica chunk
run_replicas(func, reps, seed, chunk_size=1000, workers=1)
    Evaluate func over fixed chunks of replicas, optionally in parallel
-------------------------------------------------------------------------------
"""
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
import logging
import os

import numpy as np

logger = logging.getLogger(__name__)


class NumericalError(ArithmeticError):
    """Raised when a sampler or estimator cannot produce a valid result"""


class ConfigError(ValueError):
    """Raised for an invalid experiment configuration"""


def generate_path(tag, experiment, seed, test=False):
    """Creates a path based on run tag, experiment name and seed

    Parameters
    ----------
    tag : (string)
        specifies name of the collection of runs
    experiment : (string)
        experiment name, e.g. 'eyd'
    seed : (int)
        base seed of the run
    test : (bool)
        If True, use directory for test data.  If False, use archive_dir
        (default = False)

    Returns
    -------
    archive_path : (string)
        Complete path pointing to the archive for a given run

    Examples
    --------
        import schurweylpy
        schurweylpy.utils.set_archive_dir(path='path_name_here')
        path = schurweylpy.utils.generate_path(tag='grid', experiment='eyd',
                                               seed=7)
    Will return 'path_name_here/grid/eyd/seed_000007'
    """
    if not isinstance(tag, str) or not isinstance(experiment, str):
        raise TypeError('tag and experiment must be strings')
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)):
        raise ValueError('seed must be an integer')

    if test:
        from schurweylpy import test_data_dir
        top_directory = test_data_dir
    else:
        from schurweylpy import archive_dir
        top_directory = archive_dir

    if top_directory:
        archive_path = os.path.join(top_directory, tag, experiment,
                                    'seed_{:06d}'.format(seed))
    else:
        raise NameError(''.join(('Archive Directory Not Specified: ',
                                 'Run schurweylpy.utils.set_archive_dir')))

    return archive_path


def set_archive_dir(path=None, store=True):
    # type: (str, bool) -> None
    """Set the top level directory schurweylpy archives experiment runs in

    Parameters
    ----------
    path : string
        valid path to directory
    store : bool
        if True, store the directory for future sessions

    Examples
    --------
        import schurweylpy
        schurweylpy.utils.set_archive_dir(path='path_name_here')
    """
    import schurweylpy

    if path is None:
        raise ValueError('Path does not lead to a valid directory.')
    path = os.path.expanduser(path)
    if os.path.isdir(path):
        if store:
            with open(schurweylpy.archive_path, 'w') as archive_file:
                archive_file.write(path)
        schurweylpy.archive_dir = path
    else:
        raise ValueError('Path does not lead to a valid directory.')


def read_config(path):
    """Read a ``key = value`` experiment file into a dict of strings

    Blank lines and text after ``#`` are ignored.
    """
    params = {}
    with open(path, 'r') as config_file:
        for number, line in enumerate(config_file, start=1):
            line = line.split('#', 1)[0].strip()
            if not line:
                continue
            if '=' not in line:
                raise ConfigError('{}:{}: expected key = value'.format(
                    path, number))
            key, value = (part.strip() for part in line.split('=', 1))
            params[key.replace('-', '_')] = value
    return params


def write_config(path, params):
    """Write params as sorted ``key = value`` lines"""
    with open(path, 'w') as config_file:
        for key in sorted(params):
            config_file.write('{} = {}\n'.format(key, params[key]))


def parse_vector(text):
    """Parse '0.6,0.4' as floats or '3/5,2/5' as Fractions

    Entries are Fractions only when every entry is written as a rational or
    integer.
    """
    if not isinstance(text, str):
        return tuple(text)
    items = [item.strip() for item in text.split(',') if item.strip()]
    if not items:
        raise ConfigError('empty vector')
    try:
        if all('.' not in item and 'e' not in item.lower()
               for item in items):
            return tuple(Fraction(item) for item in items)
        return tuple(float(item) for item in items)
    except (ValueError, ZeroDivisionError):
        raise ConfigError('could not parse vector {!r}'.format(text))


def replica_rng(seed, index):
    """Random stream of replica chunk ``index``; seed XOR index"""
    return np.random.default_rng(int(seed) ^ int(index))


def _run_chunk(args):
    func, count, seed, index = args
    return np.asarray(func(count, replica_rng(seed, index)))


def run_replicas(func, reps, seed, chunk_size=1000, workers=1):
    """Run reps replicas of func split into fixed-size chunks

    Parameters
    ----------
    func : (callable)
        func(count, rng) returns an array of count per-replica values; must
        be picklable when workers > 1
    reps : (int)
        total number of replicas
    seed : (int)
        base seed; chunk i uses replica_rng(seed, i)
    chunk_size : (int)
        replicas per chunk (default=1000)
    workers : (int)
        process count; 1 runs in-process (default=1)

    Returns
    -------
    values : (numpy.ndarray)
        per-replica values in chunk order; identical for any worker count
    """
    if reps < 1:
        raise ValueError('reps must be positive')
    jobs = []
    for index, start in enumerate(range(0, reps, chunk_size)):
        jobs.append((func, min(chunk_size, reps - start), seed, index))
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_run_chunk, jobs))
    else:
        chunks = [_run_chunk(job) for job in jobs]
    return np.concatenate(chunks)
