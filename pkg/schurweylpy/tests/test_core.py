# -*- coding: utf-8 -*-
# Copyright (C) 2026, schurweylpy developers
# Full license can be found in License.md
# -----------------------------------------------------------------------------
""" Tests experiment configuration, runs and the acceptance grid
"""

from fractions import Fraction
from itertools import product
import os
import numpy as np
import pytest
import schurweylpy
from schurweylpy import _core
from schurweylpy.reports import read_reports
from schurweylpy.utils import ConfigError, read_config


class TestExperimentConfig():
    """Test validation of experiment configurations"""

    def setup_method(self):
        """Runs before every method to create a clean testing setup"""
        self.mapping = {'n': '8', 'alpha': '3/5,2/5', 'seed': '7'}

    def teardown_method(self):
        """Runs after every method to clean up previous testing"""
        del self.mapping

    def test_defaults(self):
        """Strings are parsed and defaults filled in"""
        config = schurweylpy.ExperimentConfig.from_mapping('eyd', self.mapping)
        assert config.seed == 7
        assert config.tag == 'experiment_run'
        assert config.params == {'n': 8,
                                 'alpha': (Fraction(3, 5), Fraction(2, 5)),
                                 'reps': 10000, 'use_rank': False}

    def test_dashes_and_bools(self):
        """Dashed keys and boolean strings are accepted"""
        self.mapping['use-rank'] = 'true'
        self.mapping['tag'] = 'grid'
        config = schurweylpy.ExperimentConfig.from_mapping('eyd', self.mapping)
        assert config.params['use_rank'] is True
        assert config.tag == 'grid'

    def test_round_trip(self):
        """to_mapping feeds back into from_mapping"""
        config = schurweylpy.ExperimentConfig.from_mapping('topk', self.mapping)
        mapping = config.to_mapping()
        assert mapping['alpha'] == '3/5,2/5'
        assert mapping.pop('experiment') == 'topk'
        assert schurweylpy.ExperimentConfig.from_mapping('topk',
                                                         mapping) == config

    def test_unknown_experiment(self):
        """Only known experiments are accepted"""
        with pytest.raises(ConfigError):
            schurweylpy.ExperimentConfig.from_mapping('spectra', self.mapping)

    def test_missing_seed(self):
        """The seed is mandatory"""
        del self.mapping['seed']
        with pytest.raises(ConfigError):
            schurweylpy.ExperimentConfig.from_mapping('eyd', self.mapping)

    def test_unknown_key(self):
        """Keys outside the experiment are rejected"""
        self.mapping['beta'] = '0.7,0.3'
        with pytest.raises(ConfigError):
            schurweylpy.ExperimentConfig.from_mapping('eyd', self.mapping)

    def test_missing_key(self):
        """Required keys must be present"""
        del self.mapping['alpha']
        with pytest.raises(ConfigError):
            schurweylpy.ExperimentConfig.from_mapping('eyd', self.mapping)

    def test_bad_values(self):
        """Unsorted spectra, wrong d, bad integers and n < 1"""
        bad = [{'alpha': '2/5,3/5'}, {'d': '3'}, {'n': 'eight'}, {'n': '0'},
               {'use_rank': 'maybe'}, {'alpha': '0.5,0.6'}]
        for change in bad:
            mapping = dict(self.mapping)
            mapping.update(change)
            with pytest.raises(ConfigError):
                schurweylpy.ExperimentConfig.from_mapping('eyd', mapping)

    def test_beta_dimension(self):
        """alpha and beta share a dimension"""
        self.mapping['beta'] = '0.5,0.3,0.2'
        with pytest.raises(ConfigError):
            schurweylpy.ExperimentConfig.from_mapping('coupling-verify',
                                                      self.mapping)

    def test_lam(self):
        """Moments take a Young diagram"""
        config = schurweylpy.ExperimentConfig.from_mapping(
            'moments', {'lam': '3,1', 'alpha': '0.7,0.3', 'seed': 1})
        assert tuple(config.params['lam']) == (3, 1)
        with pytest.raises(ConfigError):
            schurweylpy.ExperimentConfig.from_mapping(
                'moments', {'lam': '1,3', 'alpha': '0.7,0.3', 'seed': 1})


class TestRunExperiment():
    """Test seeded experiment runs"""

    def setup_method(self):
        """Runs before every method to create a clean testing setup"""
        self.config = schurweylpy.ExperimentConfig.from_mapping(
            'eyd', {'n': 8, 'alpha': '3/5,2/5', 'reps': 1000, 'seed': 7,
                    'tag': 'test'})

    def teardown_method(self):
        """Runs after every method to clean up previous testing"""
        del self.config

    def test_reports(self):
        """Monte Carlo and exact reports for small n"""
        reports = schurweylpy.run_experiment(self.config)
        assert len(reports) == 2
        assert reports[0].n_reps == 1000
        assert reports[1].exact
        assert all(report.passed for report in reports)

    def test_deterministic(self):
        """Equal seeds give equal reports for any worker count"""
        first = schurweylpy.run_experiment(self.config)
        second = schurweylpy.run_experiment(self.config, workers=2)
        assert first == second

    def test_output(self, tmp_path):
        """Reports are appended to the output files"""
        output = str(tmp_path / 'report.jsonl')
        csv_output = str(tmp_path / 'report.csv')
        schurweylpy.run_experiment(self.config, output=output,
                                   csv_output=csv_output)
        schurweylpy.run_experiment(self.config, output=output)
        assert len(read_reports(output)) == 4
        assert os.path.isfile(csv_output)

    def test_archive(self, tmp_path, monkeypatch):
        """Archived runs hold config, reports and version"""
        monkeypatch.setattr(schurweylpy, 'test_data_dir', str(tmp_path))
        schurweylpy.run_experiment(self.config, archive=True, test=True)
        path = os.path.join(str(tmp_path), 'test', 'eyd', 'seed_000007')
        assert sorted(os.listdir(path)) == ['experiment.namelist',
                                            'report.jsonl', 'version.txt']
        config = read_config(os.path.join(path, 'experiment.namelist'))
        assert config['experiment'] == 'eyd'
        assert config['seed'] == '7'
        with open(os.path.join(path, 'version.txt')) as version_file:
            assert version_file.readline().strip() == \
                'schurweylpy v' + schurweylpy.__version__

    def test_dyck(self):
        """The bijection experiment passes"""
        config = schurweylpy.ExperimentConfig.from_mapping(
            'dyck-bijection', {'n': 5, 'seed': 0})
        reports = schurweylpy.run_experiment(config)
        assert len(reports) == 8
        assert all(report.passed for report in reports)

    def test_moments(self):
        """The moments experiment includes the power-function identity"""
        config = schurweylpy.ExperimentConfig.from_mapping(
            'moments', {'lam': '2,1', 'alpha': '0.5,0.3,0.2', 'draws': 1000,
                        'unitary_seed': 3, 'seed': 1})
        reports = schurweylpy.run_experiment(config)
        assert len(reports) == 16
        power = [report for report in reports
                 if report.experiment == 'keyl_power']
        assert [tuple(report.params['mu']) for report in power] == \
            list(_core.POWER_SHAPES)


class TestVerifyAll():
    """Test the acceptance grid"""

    def test_exhaustive_criterion(self):
        """Greene's theorem holds on every short word"""
        reports = schurweylpy.verify_all(quick=True, criteria=['greene'])
        assert len(reports) == 5
        assert all(report.passed for report in reports)
        assert all(report.empirical_mean == 0 for report in reports)

    def test_unknown_criterion(self):
        """Unknown criteria are configuration errors"""
        with pytest.raises(ConfigError):
            schurweylpy.verify_all(criteria=['greene', 'spectra'])

    def test_seeded(self):
        """Equal seeds give equal reports"""
        first = schurweylpy.verify_all(seed=3, quick=True, criteria=['eyd'])
        second = schurweylpy.verify_all(seed=3, quick=True, criteria=['eyd'])
        assert first == second
        assert all(report.passed for report in first)

    def test_corrupt(self):
        """Shrunken Monte Carlo bounds are caught; exact reports are kept"""
        reports = schurweylpy.verify_all(quick=True, corrupt=0.0,
                                         criteria=['eyd'])
        exact = [report for report in reports if report.exact]
        sampled = [report for report in reports if not report.exact]
        assert len(exact) == 4
        assert all(report.passed for report in exact)
        assert len(sampled) == 2
        assert not any(report.passed for report in sampled)

    def test_timings(self):
        """Wall-clock time and budget are handed back"""
        timings = {}
        schurweylpy.verify_all(quick=True, criteria=['greene'],
                               timings=timings)
        assert timings['budget'] == _core.RUNTIME_BUDGET
        assert 0 <= timings['elapsed'] < timings['budget']

    def test_spectrum_grid(self):
        """Three spectra for every d in 2..4 and n in 8..64"""
        cells = list(_core._spectrum_grid(np.random.default_rng(4), False))
        assert len(cells) == 36
        for d, n in product((2, 3, 4), (8, 16, 32, 64)):
            spectra = [alpha for dim, size, alpha in cells
                       if (dim, size) == (d, n)]
            assert len(spectra) == 3
            for alpha in spectra:
                assert len(alpha) == d
                assert sum(alpha) == pytest.approx(1.0)
                assert list(alpha) == sorted(alpha, reverse=True)

    def test_quick_spectrum_grid(self):
        """One spectrum per cell at n = 16 for d = 2, 3"""
        cells = list(_core._spectrum_grid(np.random.default_rng(4), True))
        assert [(d, n) for d, n, _ in cells] == [(2, 16), (3, 16)]

    def test_keyl_power_identity(self):
        """The Keyl grid checks the power-function expectation"""
        reports = schurweylpy.verify_all(seed=1, quick=True,
                                         criteria=['keyl'])
        power = [report for report in reports
                 if report.experiment == 'keyl_power']
        assert len(power) == 2 * len(_core.POWER_SHAPES)
        assert {tuple(report.params['mu']) for report in power} == \
            set(_core.POWER_SHAPES)

    def test_criteria_registry(self):
        """Every criterion has a runner"""
        assert set(_core.CRITERIA) == {
            'pmf', 'greene', 'recording', 'eyd', 'shape_moments', 'topk',
            'row1_growth', 'keyl', 'tomography', 'dyck', 'biased',
            'sw_coupling'}
