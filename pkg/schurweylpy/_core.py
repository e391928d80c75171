#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Copyright (C) 2026, schurweylpy developers
# Full license can be found in License.md
# -----------------------------------------------------------------------------
"""Configured, seeded experiment runs and the acceptance suite

Classes
-------------------------------------------------------------------------------
ExperimentConfig
    Validated experiment name, parameters and seed

Functions
-------------------------------------------------------------------------------
run_experiment(config, workers=1, archive=False, output=None,
               csv_output=None, test=False)
    Runs one experiment, archives and writes its reports
verify_all(seed=0, quick=False, corrupt=None, criteria=None, workers=1,
           timings=None)
    Runs the acceptance grid and returns every report
-------------------------------------------------------------------------------
"""
from dataclasses import dataclass, field
from functools import partial
from itertools import product
import logging
import os
import subprocess
import time

import numpy as np

from schurweylpy import __version__
from schurweylpy import coupling, keyl, spectrum
from schurweylpy.linalg import density_from_spectrum, haar_unitary
from schurweylpy.partitions import Partition, check_prob_vec, partitions_of
from schurweylpy.reports import (UPPER, failure_report, tv_report,
                                 write_reports)
from schurweylpy.schur import weyl_ratio
from schurweylpy.schur_weyl import sw_pmf, sw_sample
from schurweylpy.tableaux import (behead_tableau, behead_word,
                                  curtail_tableau, curtail_word, greene_oracle,
                                  recording_tableau, sh_rsk)
from schurweylpy.utils import (ConfigError, generate_path, parse_vector,
                               run_replicas, write_config)

logger = logging.getLogger(__name__)

EXPERIMENT_KEYS = {
    'sample-sw': {'n', 'd', 'alpha', 'reps'},
    'eyd': {'n', 'd', 'alpha', 'reps', 'use_rank'},
    'topk': {'n', 'd', 'alpha', 'k', 'reps'},
    'tomography': {'n', 'd', 'alpha', 'reps', 'inner', 'unitary_seed'},
    'pca': {'n', 'd', 'alpha', 'k', 'reps', 'inner', 'unitary_seed'},
    'moments': {'lam', 'd', 'alpha', 'draws', 'unitary_seed'},
    'coupling-verify': {'n', 'd', 'alpha', 'beta', 'reps'},
    'dyck-bijection': {'n'},
}
REQUIRED_KEYS = {
    'sample-sw': {'n', 'alpha'},
    'eyd': {'n', 'alpha'},
    'topk': {'n', 'alpha'},
    'tomography': {'n', 'alpha'},
    'pca': {'n', 'alpha'},
    'moments': {'lam', 'alpha'},
    'coupling-verify': {'n', 'alpha', 'beta'},
    'dyck-bijection': {'n'},
}
DEFAULTS = {'reps': 10000, 'k': 1, 'inner': 10000, 'draws': 100000,
            'use_rank': False, 'unitary_seed': None}
INT_KEYS = {'n', 'd', 'k', 'reps', 'inner', 'draws', 'unitary_seed'}
PMF_REF = 'Schur-Weyl pmf normalization'
SHAPE_MOMENT_REF = 'Schur-Weyl shape moments'
RUNTIME_BUDGET = 900.0
POWER_SHAPES = ((1, 1), (2, 1))


def _parse_bool(value):
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in ('true', 'yes', '1', '.true.'):
        return True
    if text in ('false', 'no', '0', '.false.'):
        return False
    raise ConfigError('expected a boolean, got {!r}'.format(value))


def _parse_int(key, value):
    if isinstance(value, bool):
        raise ConfigError('{} must be an integer'.format(key))
    try:
        return int(str(value).strip())
    except ValueError:
        raise ConfigError('{} must be an integer, got {!r}'.format(key,
                                                                  value))


def _parse_spectrum(key, value):
    vector = parse_vector(value)
    try:
        return check_prob_vec(vector, sorted_desc=True)
    except ValueError as err:
        raise ConfigError('{}: {}'.format(key, err))


def _format_value(value):
    if isinstance(value, (tuple, list)):
        return ','.join(str(v) for v in value)
    return str(value)


@dataclass
class ExperimentConfig:
    """One experiment run

    Parameters
    ----------
    experiment : (str)
        one of the keys of EXPERIMENT_KEYS
    seed : (int)
        base seed; identical config and seed give identical reports
    params : (dict)
        validated parameters, defaults filled in
    tag : (str)
        collection name used for the archive path (default='experiment_run')
    """
    experiment: str
    seed: int
    params: dict = field(default_factory=dict)
    tag: str = 'experiment_run'

    @classmethod
    def from_mapping(cls, experiment, mapping):
        """Validate a mapping of (string or typed) values

        Raises
        ------
        ConfigError
            for an unknown experiment, unknown or missing keys, a missing
            seed, or values that fail to parse
        """
        if experiment not in EXPERIMENT_KEYS:
            raise ConfigError('unknown experiment {!r}'.format(experiment))
        mapping = {key.replace('-', '_'): value
                   for key, value in mapping.items() if value is not None}
        tag = str(mapping.pop('tag', 'experiment_run'))
        if 'seed' not in mapping:
            raise ConfigError('seed is mandatory')
        seed = _parse_int('seed', mapping.pop('seed'))
        allowed = EXPERIMENT_KEYS[experiment]
        unknown = sorted(set(mapping) - allowed)
        if unknown:
            raise ConfigError('unknown keys for {}: {}'.format(
                experiment, ', '.join(unknown)))
        missing = sorted(REQUIRED_KEYS[experiment] - set(mapping))
        if missing:
            raise ConfigError('missing keys for {}: {}'.format(
                experiment, ', '.join(missing)))
        params = {key: DEFAULTS[key] for key in allowed if key in DEFAULTS}
        for key, value in mapping.items():
            if key in INT_KEYS:
                params[key] = _parse_int(key, value)
            elif key in ('alpha', 'beta'):
                params[key] = _parse_spectrum(key, value)
            elif key == 'use_rank':
                params[key] = _parse_bool(value)
            elif key == 'lam':
                try:
                    params[key] = Partition(parse_vector(value))
                except ValueError as err:
                    raise ConfigError('lam: {}'.format(err))
        if 'd' in params and len(params['alpha']) != params['d']:
            raise ConfigError('alpha has {} entries but d = {}'.format(
                len(params['alpha']), params['d']))
        if 'beta' in params and len(params['beta']) != len(params['alpha']):
            raise ConfigError('alpha and beta differ in dimension')
        if params.get('n', 1) < 1:
            raise ConfigError('n must be positive')
        return cls(experiment, seed, params, tag)

    def to_mapping(self):
        """Flat mapping of strings, as written to experiment.namelist"""
        mapping = {key: _format_value(value)
                   for key, value in self.params.items() if value is not None}
        mapping.update({'experiment': self.experiment, 'seed': str(self.seed),
                        'tag': self.tag})
        return mapping


def _density(params):
    alpha = params['alpha']
    unitary = None
    if params.get('unitary_seed') is not None:
        unitary = haar_unitary(len(alpha),
                               np.random.default_rng(params['unitary_seed']))
    return density_from_spectrum(alpha, unitary)


def _sw_rows(count, rng, n, alpha):
    return [sw_sample(n, alpha, rng).padded(len(alpha)) for _ in range(count)]


def _run_sample_sw(params, rng, workers):
    n, alpha, reps = params['n'], params['alpha'], params['reps']
    pmf = sw_pmf(n, alpha)
    shapes = run_replicas(partial(_sw_rows, n=n, alpha=alpha), reps,
                          int(rng.integers(2 ** 31)), workers=workers)
    gap = abs(float(sum(pmf.values())) - 1.0)
    return [failure_report('pmf_normalization', {'n': n, 'alpha': alpha},
                           0 if gap <= 1e-9 else gap, 1,
                           '|sum_lam dim(lam) s_lam(alpha) - 1| <= 1e-9',
                           ref=PMF_REF),
            tv_report('sample_sw', {'n': n, 'alpha': alpha}, shapes,
                      {lam.padded(len(alpha)): p for lam, p in pmf.items()},
                      'TV(samples, SW^n(alpha)) <= 0.02',
                      ref='Schur-Weyl sampler')]


def _run_eyd(params, rng, workers):
    n, alpha = params['n'], params['alpha']
    reports = [spectrum.verify_eyd_bound(n, alpha, params['reps'], rng,
                                         use_rank=params['use_rank'],
                                         workers=workers)]
    if n <= 8:
        reports.append(spectrum.verify_eyd_exact(n, alpha,
                                                 params['use_rank']))
    return reports


def _run_topk(params, rng, workers):
    n, alpha, k = params['n'], params['alpha'], params['k']
    reports = [spectrum.verify_topk_bound(n, alpha, k, params['reps'], rng,
                                          workers=workers)]
    reports.extend(spectrum.verify_topk_sum_bound(
        n, alpha, k, params['reps'], rng, workers=workers))
    return reports


def _run_tomography(params, rng, workers):
    rho = _density(params)
    return [keyl.verify_frobenius_bound(params['n'], rho, params['reps'],
                                        rng, params['inner'], workers),
            keyl.verify_trace_bound(params['n'], rho, params['reps'], rng,
                                    params['inner'], workers)]


def _run_pca(params, rng, workers):
    return [keyl.verify_pca_bound(params['n'], _density(params), params['k'],
                                  params['reps'], rng, params['inner'],
                                  workers)]


def _run_moments(params, rng, workers):
    lam, rho, draws = params['lam'], _density(params), params['draws']
    reports = [keyl.verify_calibration(lam, rho, draws, rng),
               keyl.verify_first_diagonal(lam, rho, draws, rng)]
    reports.extend(keyl.verify_power_expectation(lam, mu, rho, draws, rng)
                   for mu in POWER_SHAPES
                   if len(mu) <= len(params['alpha']))
    reports.extend(keyl.verify_diagonal_moments(lam, rho, draws, rng))
    for m in range(1, len(params['alpha']) + 1):
        reports.append(keyl.verify_partial_spectrum_identity(lam, rho, m,
                                                             draws, rng))
    return reports


def _run_coupling(params, rng, workers):
    return coupling.verify_couple_sw(params['alpha'], params['beta'],
                                     params['n'], params['reps'], rng,
                                     workers)


def _run_dyck(params, rng, workers):
    return coupling.verify_dyck_bijection(params['n'])


RUNNERS = {'sample-sw': _run_sample_sw, 'eyd': _run_eyd, 'topk': _run_topk,
           'tomography': _run_tomography, 'pca': _run_pca,
           'moments': _run_moments, 'coupling-verify': _run_coupling,
           'dyck-bijection': _run_dyck}


def run_experiment(config, workers=1, archive=False, output=None,
                   csv_output=None, test=False):
    """Runs one experiment and writes its reports

    Parameters
    ----------
    config : (ExperimentConfig)
        validated configuration
    workers : (int)
        worker processes for replicas; does not change the result
        (default=1)
    archive : (bool)
        If True, archive config, reports and version under
        generate_path(tag, experiment, seed) (default=False)
    output : (str or NoneType)
        JSON-lines file the reports are appended to (default=None)
    csv_output : (str or NoneType)
        CSV mirror of output (default=None)
    test : (bool)
        If True, archive under the test data directory (default=False)

    Returns
    -------
    reports : (list of BoundReport)

    Examples
    --------
    import schurweylpy
    config = schurweylpy.ExperimentConfig.from_mapping(
        'eyd', {'n': 16, 'alpha': '0.6,0.4', 'reps': 100000, 'seed': 7})
    schurweylpy.run_experiment(config, output='report.jsonl')
    """
    rng = np.random.default_rng(config.seed)
    logger.info('running %s with seed %d', config.experiment, config.seed)
    reports = RUNNERS[config.experiment](config.params, rng, workers)
    if archive:
        path = generate_path(config.tag, config.experiment.replace('-', '_'),
                             config.seed, test)
        _archive_experiment(path, config, reports)
    if output is not None:
        write_reports(reports, output, csv_path=csv_output)
    return reports


def _git_hash():
    here = os.path.dirname(os.path.abspath(__file__))
    try:
        text = subprocess.check_output(['git', 'rev-parse', '--short',
                                        'HEAD'], cwd=here,
                                       stderr=subprocess.DEVNULL)
    except (OSError, subprocess.CalledProcessError):
        return 'unavailable'
    return text.decode('utf-8').strip()


def _archive_experiment(path, config, reports):
    """Writes experiment.namelist, report.jsonl and version.txt to path"""
    os.makedirs(path, exist_ok=True)
    write_config(os.path.join(path, 'experiment.namelist'),
                 config.to_mapping())
    write_reports(reports, os.path.join(path, 'report.jsonl'), append=False)
    with open(os.path.join(path, 'version.txt'), 'w') as version_file:
        version_file.write('schurweylpy v' + __version__ + '\n')
        version_file.write('short hash ' + _git_hash() + '\n')


def _random_spectrum(d, rng):
    return tuple(sorted(rng.dirichlet(np.ones(d)), reverse=True))


def _pmf_criteria(rng, quick, workers):
    reports = []
    for d, n in product((2, 3), (4, 6) if quick else (4, 7, 10)):
        for _ in range(5):
            alpha = _random_spectrum(d, rng)
            total = sum(sw_pmf(n, alpha).values())
            reports.append(failure_report(
                'pmf_normalization', {'n': n, 'alpha': alpha},
                0 if abs(total - 1.0) <= 1e-9 else abs(total - 1.0), 1,
                '|sum_lam dim(lam) s_lam(alpha) - 1| <= 1e-9',
                ref=PMF_REF))
    return reports


def _all_words(n, d):
    return product(range(1, d + 1), repeat=n)


def _greene_criteria(rng, quick, workers):
    reports = []
    for n in range(1, (5 if quick else 8) + 1):
        failures = 0
        for word in _all_words(n, 3):
            lam = sh_rsk(word)
            for k in range(1, 4):
                if sum(lam[:k]) != greene_oracle(word, k):
                    failures += 1
        reports.append(failure_report(
            'greene', {'n': n, 'd': 3}, failures, 3 ** n,
            'sum_{i<=k} shRSK(w)_i == greene(w, k)',
            ref="Greene's theorem"))
    return reports


def _recording_criteria(rng, quick, workers):
    reports = []
    for n, d in ((6, 2), (5, 3)) if quick else ((8, 2), (7, 3)):
        failures = 0
        for word in _all_words(n, d):
            q_tab = recording_tableau(word)
            if recording_tableau(curtail_word(word)) != curtail_tableau(q_tab):
                failures += 1
            if recording_tableau(behead_word(word)) != behead_tableau(q_tab):
                failures += 1
        reports.append(failure_report(
            'recording_tableau', {'n': n, 'd': d}, failures, d ** n,
            'Q(curtail w) == curtail Q(w) and Q(behead w) == behead Q(w)',
            ref='recording tableau of curtail and behead'))
    return reports


EXACT_SPECTRA = ('3/5,2/5', '1/2,1/3,1/6', '2/5,3/10,1/5,1/10')
GRID_DIMS = (2, 3, 4)
GRID_SIZES = (8, 16, 32, 64)
GRID_SPECTRA = 3


def _spectrum_grid(rng, quick):
    """(d, n, alpha) over the standard grid, random spectra per cell

    The quick grid keeps d in (2, 3), n = 16 and one spectrum per cell.
    """
    dims, sizes = ((2, 3), (16,)) if quick else (GRID_DIMS, GRID_SIZES)
    count = 1 if quick else GRID_SPECTRA
    for d, n in product(dims, sizes):
        for _ in range(count):
            yield d, n, _random_spectrum(d, rng)


def _eyd_criteria(rng, quick, workers):
    reports = []
    for text in EXACT_SPECTRA[:2] if quick else EXACT_SPECTRA:
        alpha = parse_vector(text)
        for n in (4, 6) if quick else (4, 6, 8):
            reports.append(spectrum.verify_eyd_exact(n, alpha))
    reps = 2000 if quick else 100000
    for d, n, alpha in _spectrum_grid(rng, quick):
        reports.append(spectrum.verify_eyd_bound(n, alpha, reps, rng,
                                                 workers=workers))
    return reports


def _shape_moment_criteria(rng, quick, workers):
    reports = []
    for text in EXACT_SPECTRA[:2]:
        alpha = parse_vector(text)
        for n in range(2, (6 if quick else 8) + 1):
            params = {'n': n, 'alpha': alpha}
            reports.append(failure_report(
                'second_moment', params,
                int(not spectrum.verify_second_moment(n, alpha)), 1,
                'E sum lam_i^2 <= sum (n alpha_i)^2 + dn',
                ref=SHAPE_MOMENT_REF))
            reports.append(failure_report(
                'expectation_majorization', params,
                int(not spectrum.verify_expectation_majorization(n, alpha)),
                1, 'E lam majorizes n alpha', ref=SHAPE_MOMENT_REF))
    return reports


def _topk_criteria(rng, quick, workers):
    reports = []
    for text in EXACT_SPECTRA[:2]:
        alpha = parse_vector(text)
        for n, k in product((4, 8), (1, 2)):
            reports.append(spectrum.verify_topk_exact(n, alpha, k))
            reports.extend(spectrum.verify_topk_sum_bound(n, alpha, k))
    for d in (2, 3):
        reports.append(spectrum.verify_uniform_row1_exact(8, d))
    reps = 1000 if quick else 10000
    cells = list(_spectrum_grid(rng, quick))
    if not quick:
        cells.extend((d, 256, _random_spectrum(d, rng)) for d in (2, 4))
    for d, n, alpha in cells:
        for k in (1, 2):
            reports.append(spectrum.verify_topk_bound(n, alpha, k, reps, rng,
                                                      workers=workers))
            reports.extend(spectrum.verify_topk_sum_bound(
                n, alpha, k, reps, rng, workers=workers))
    for n, d in product((64,) if quick else (64, 256), (2, 4)):
        reports.extend(spectrum.verify_uniform_row1(n, d, reps, rng,
                                                    workers=workers))
    return reports


def _row1_growth_criteria(rng, quick, workers):
    reports = []
    alpha = parse_vector(EXACT_SPECTRA[2])
    for n, k in product((4, 6) if quick else (4, 6, 8), (1, 2, 3)):
        reports.append(failure_report(
            'reduction_dominance', {'n': n, 'alpha': alpha, 'k': k},
            int(not spectrum.verify_reduction_dominance(n, alpha, k)), 1,
            'E sum_{i<=k} lam_i under alpha <= under its reduction',
            ref='spectrum reduction dominance'))
    for d in (2, 3):
        n = 8 if quick else 12
        reports.append(failure_report(
            'increment_recurrence', {'n': n, 'd': d},
            int(not spectrum.verify_increment_recurrence(n, d)), 1,
            'delta_m <= sqrt(d + sum_{j<=m} delta_j) / sqrt(d m)',
            ref='first-row increment recurrence'))
        reports.extend(spectrum.verify_row1_increments(
            32, d, 1000 if quick else 10000, rng, workers=workers))
    return reports


KEYL_SHAPES = ((3, 1), (4, 2, 1), (5, 3), (6, 4, 2))


def _keyl_criteria(rng, quick, workers):
    reports = []
    draws = 10000 if quick else 100000
    for lam in KEYL_SHAPES[:2] if quick else KEYL_SHAPES:
        d = max(len(lam), 2)
        alpha = _random_spectrum(d, rng)
        rho = density_from_spectrum(alpha, haar_unitary(d, rng))
        reports.append(keyl.verify_calibration(lam, rho, draws, rng))
        reports.append(keyl.verify_first_diagonal(lam, rho, draws, rng))
        reports.extend(keyl.verify_power_expectation(lam, mu, rho, draws,
                                                     rng)
                       for mu in POWER_SHAPES)
        reports.extend(keyl.verify_diagonal_moments(lam, rho, draws, rng))
    failures = total = 0
    for size in range(1, 11):
        for lam in partitions_of(size, 4):
            for m in range(2, 5):
                for i in range(1, m):
                    pair = weyl_ratio(lam, i, m)
                    if pair is None:
                        continue
                    total += 1
                    failures += int(pair[0] != pair[1])
    reports.append(failure_report('weyl_ratio', {'max_size': 10, 'd': 4},
                                  failures, total,
                                  'dimension ratio == 1 + 1/(lam_i - lam_m '
                                  '+ m - i)',
                                  ref='Weyl dimension ratio'))
    return reports


def _tomography_criteria(rng, quick, workers):
    reports = []
    reps, inner = (200, 2000) if quick else (1000, 10000)
    for d, n in product((2,) if quick else (2, 3),
                        (8,) if quick else (8, 16, 32)):
        rho = density_from_spectrum(_random_spectrum(d, rng),
                                    haar_unitary(d, rng))
        reports.append(keyl.verify_frobenius_bound(n, rho, reps, rng, inner,
                                                   workers))
        for k in sorted({1, d}):
            reports.append(keyl.verify_pca_bound(n, rho, k, reps, rng, inner,
                                                 workers))
    return reports


def _dyck_criteria(rng, quick, workers):
    reports = []
    for n in range(2, (8 if quick else 14) + 1):
        reports.extend(coupling.verify_dyck_bijection(n))
    return reports


BIASED_PAIRS = ((0.5, 0.8), (0.6, 0.9), (0.3, 0.1), (0.5, 0.5), (0.45, 0.0))


def _biased_criteria(rng, quick, workers):
    reports = [coupling.verify_cdf_claim(p, q, n)
               for p, q in BIASED_PAIRS for n in range(1, 21)]
    reps = 10000
    for p, q in BIASED_PAIRS[:2] if quick else BIASED_PAIRS:
        for n in (6,) if quick else (6, 10):
            reports.extend(coupling.verify_couple_biased(p, q, n, reps, rng,
                                                         workers))
    return reports


SW_PAIRS = (('0.5,0.3,0.2', '0.6,0.3,0.1'), ('0.4,0.35,0.25', '0.7,0.2,0.1'))


def _sw_criteria(rng, quick, workers):
    reports = []
    reps = 10000 if quick else 100000
    for alpha, beta in SW_PAIRS[:1] if quick else SW_PAIRS:
        reports.extend(coupling.verify_couple_sw(
            parse_vector(alpha), parse_vector(beta), 6, reps, rng, workers))
    return reports


CRITERIA = {'pmf': _pmf_criteria, 'greene': _greene_criteria,
            'recording': _recording_criteria, 'eyd': _eyd_criteria,
            'shape_moments': _shape_moment_criteria, 'topk': _topk_criteria,
            'row1_growth': _row1_growth_criteria,
            'keyl': _keyl_criteria, 'tomography': _tomography_criteria,
            'dyck': _dyck_criteria, 'biased': _biased_criteria,
            'sw_coupling': _sw_criteria}


def verify_all(seed=0, quick=False, corrupt=None, criteria=None, workers=1,
               timings=None):
    """Runs the acceptance grid

    Parameters
    ----------
    seed : (int)
        base seed (default=0)
    quick : (bool)
        smaller grid and fewer replicas (default=False)
    corrupt : (float or NoneType)
        if given, every Monte Carlo upper bound is multiplied by this factor
        before pass/fail is decided; used to check that failures are caught
        (default=None)
    criteria : (list of str or NoneType)
        subset of CRITERIA to run, all when None (default=None)
    workers : (int)
        worker processes for replicas (default=1)
    timings : (dict or NoneType)
        if given, receives 'elapsed' (wall-clock seconds) and 'budget'
        (default=None)

    Returns
    -------
    reports : (list of BoundReport)
    """
    names = list(CRITERIA) if criteria is None else list(criteria)
    unknown = [name for name in names if name not in CRITERIA]
    if unknown:
        raise ConfigError('unknown criteria: {}'.format(', '.join(unknown)))
    rng = np.random.default_rng(seed)
    reports = []
    start = time.perf_counter()
    for name in names:
        logger.info('criterion %s', name)
        reports.extend(CRITERIA[name](rng, quick, workers))
    elapsed = time.perf_counter() - start
    logger.info('verify_all finished in %.1f s', elapsed)
    if elapsed > RUNTIME_BUDGET:
        logger.warning('verify_all took %.1f s, over the %.0f s budget',
                       elapsed, RUNTIME_BUDGET)
    if timings is not None:
        timings['elapsed'] = elapsed
        timings['budget'] = RUNTIME_BUDGET
    if corrupt is not None:
        reports = [report.rescaled(corrupt)
                   if report.relation == UPPER and not report.exact
                   else report for report in reports]
    return reports
