#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Copyright (C) 2026, schurweylpy developers
# Full license can be found in License.md
# -----------------------------------------------------------------------------
"""Bound reports and their JSON-lines / CSV serialization

Classes
-------------------------------------------------------------------------------
BoundReport
    Empirical (or exact) expectation compared against a bound

Functions
-------------------------------------------------------------------------------
merge_reports(first, second)
    Combine two Monte Carlo reports of the same criterion
reports_frame(reports)
    pandas.DataFrame with one row per report
write_reports(reports, path, csv_path=None, append=True)
    Append reports as JSON lines (and optionally CSV)
summary_table(reports)
    Short per-criterion pass/fail table
failure_report, tv_report
    Zero-failure counts and total variation against a target law
-------------------------------------------------------------------------------
"""
from dataclasses import dataclass, field, replace
from fractions import Fraction
import json
import math
import os

import numpy as np
import pandas as pds

UPPER = '<='
LOWER = '>='
EQUAL = '=='
SIGMAS = 3.0
TV_LIMIT = 0.02

COLUMNS = ['experiment', 'params', 'bound_name', 'bound_ref', 'relation',
           'empirical_mean', 'std_error', 'bound', 'n_reps', 'exact', 'pass']


def _compare(mean, std_error, bound, relation, exact):
    slack = 0 if exact else SIGMAS * std_error
    if relation == UPPER:
        return mean <= bound + slack
    if relation == LOWER:
        return mean >= bound - slack
    if relation == EQUAL:
        return abs(mean - bound) <= slack
    raise ValueError('Unknown relation {!r}'.format(relation))


@dataclass(frozen=True)
class BoundReport:
    """Outcome of one criterion

    ``passed`` is mean <= bound + 3 * std_error for upper bounds (mirrored
    for lower bounds, two-sided for identities).  Exact reports compare with
    zero tolerance, in rational arithmetic when both sides are Fractions.

    Parameters
    ----------
    experiment : (str)
        experiment name, e.g. 'eyd'
    params : (dict)
        parameters identifying the run
    empirical_mean : (float or Fraction)
        Monte Carlo mean or exact expectation
    std_error : (float)
        standard error of the mean, 0 for exact reports
    bound : (float or Fraction)
        the bound being checked
    n_reps : (int)
        number of replicas, 0 for exact reports
    bound_name : (str)
        the inequality checked, e.g. 'E||lam/n - alpha||^2 <= d/n'
    relation : (str)
        '<=', '>=' or '==' (default='<=')
    exact : (bool)
        True if the mean is an exact expectation (default=False)
    bound_ref : (str)
        short name of the result the bound comes from, e.g. "Greene's
        theorem" (default='')
    """
    experiment: str
    params: dict
    empirical_mean: object
    std_error: float
    bound: object
    n_reps: int
    bound_name: str
    relation: str = UPPER
    exact: bool = False
    bound_ref: str = ''
    passed: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, 'passed', bool(_compare(
            self.empirical_mean, self.std_error, self.bound, self.relation,
            self.exact)))

    @classmethod
    def from_values(cls, experiment, params, values, bound, bound_name,
                    relation=UPPER, ref=''):
        """Report built from per-replica values"""
        values = np.asarray(values, dtype=float)
        if values.size == 0:
            raise ValueError('No replica values.')
        std = values.std(ddof=1) if values.size > 1 else 0.0
        return cls(experiment, dict(params), float(values.mean()),
                   float(std / math.sqrt(values.size)), float(bound),
                   int(values.size), bound_name, relation, bound_ref=ref)

    @classmethod
    def from_exact(cls, experiment, params, value, bound, bound_name,
                   relation=UPPER, ref=''):
        """Report for an exactly computed expectation"""
        return cls(experiment, dict(params), value, 0.0, bound, 0,
                   bound_name, relation, exact=True, bound_ref=ref)

    def rescaled(self, factor):
        """Same report checked against bound * factor"""
        return replace(self, bound=self.bound * factor)

    def to_record(self):
        return {'experiment': self.experiment,
                'params': json.dumps(_plain(self.params), sort_keys=True),
                'bound_name': self.bound_name,
                'bound_ref': self.bound_ref,
                'relation': self.relation,
                'empirical_mean': float(self.empirical_mean),
                'std_error': float(self.std_error),
                'bound': float(self.bound),
                'n_reps': int(self.n_reps),
                'exact': bool(self.exact),
                'pass': bool(self.passed)}


def _plain(value):
    """Params converted to JSON-friendly values"""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [_plain(v) for v in value]
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    return value


def merge_reports(first, second):
    """Pool two Monte Carlo reports of the same criterion

    Means and variances are combined from counts, so merging is associative
    up to rounding.
    """
    if first.exact or second.exact:
        raise ValueError('Exact reports cannot be merged.')
    if (first.experiment, first.bound_name, first.relation) != \
            (second.experiment, second.bound_name, second.relation):
        raise ValueError('Reports check different criteria.')
    n_a, n_b = first.n_reps, second.n_reps
    total = n_a + n_b
    var_a = first.std_error ** 2 * n_a
    var_b = second.std_error ** 2 * n_b
    delta = second.empirical_mean - first.empirical_mean
    mean = first.empirical_mean + delta * n_b / total
    ssq = var_a * (n_a - 1) + var_b * (n_b - 1) + delta ** 2 * n_a * n_b / total
    std_error = math.sqrt(ssq / (total - 1) / total) if total > 1 else 0.0
    return replace(first, empirical_mean=mean, std_error=std_error,
                   n_reps=total)


def reports_frame(reports):
    """DataFrame with one row per report, columns in schema order"""
    return pds.DataFrame.from_records([r.to_record() for r in reports],
                                      columns=COLUMNS)


def write_reports(reports, path, csv_path=None, append=True):
    """Write reports as JSON lines (and an optional CSV mirror)

    Parameters
    ----------
    reports : (list of BoundReport)
    path : (str)
        JSON-lines file
    csv_path : (str or NoneType)
        CSV mirror; written with a header when the file is new
        (default=None)
    append : (bool)
        append to existing files rather than overwrite (default=True)
    """
    frame = reports_frame(reports)
    text = frame.to_json(orient='records', lines=True, double_precision=15)
    mode = 'a' if append else 'w'
    with open(path, mode) as out_file:
        out_file.write(text.rstrip('\n') + '\n')
    if csv_path is not None:
        header = not (append and os.path.isfile(csv_path))
        frame.to_csv(csv_path, mode=mode, header=header, index=False)


def read_reports(path):
    """Load a JSON-lines report file into a DataFrame"""
    return pds.read_json(path, orient='records', lines=True)


def summary_table(reports):
    """Per-criterion table with experiment, tag, inequality, mean and pass"""
    frame = reports_frame(reports)
    return frame[['experiment', 'bound_ref', 'bound_name', 'empirical_mean',
                  'bound', 'std_error', 'pass']]


def failure_report(experiment, params, failures, total, name, ref=''):
    """Exact report requiring a failure count (or fraction) of zero"""
    return BoundReport(experiment, dict(params), failures, 0.0, 0, total,
                       name, EQUAL, exact=True, bound_ref=ref)


def tv_report(experiment, params, samples, target, name, limit=TV_LIMIT,
              ref=''):
    """Total variation between sampled labels and a target law

    Parameters
    ----------
    samples : (array-like)
        one row of integers per sample
    target : (dict)
        tuple of int -> probability
    limit : (float)
        bound on the distance (default=0.02)
    """
    samples = np.asarray(samples)
    if samples.ndim == 1:
        samples = samples[:, None]
    labels, counts = np.unique(samples, axis=0, return_counts=True)
    empirical = {tuple(int(v) for v in label): int(count)
                 for label, count in zip(labels, counts)}
    total = len(samples)
    keys = set(empirical) | set(target)
    value = 0.5 * math.fsum(abs(empirical.get(key, 0) / total
                                - float(target.get(key, 0))) for key in keys)
    return BoundReport(experiment, dict(params), value, 0.0, limit, total,
                       name, UPPER, bound_ref=ref)
