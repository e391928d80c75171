"""Unit tests for the Experiment loader
"""
import os
import matplotlib
import pytest
import schurweylpy
from schurweylpy.reports import BoundReport, write_reports
from schurweylpy.utils import write_config

matplotlib.use('Agg')


class TestExperimentObject():
    """Test basic experiment object functionality
    """
    def setup_method(self):
        """Runs before every method to create a clean testing setup"""
        self.tag = 'test'
        self.experiment = 'eyd'
        self.seed = 7

    def teardown_method(self):
        """Runs after every method to clean up previous testing"""
        del self.tag, self.experiment, self.seed

    def test_experiment_input_exception(self):
        """File not found error should be produced if the run does not exist
        """
        with pytest.raises(IOError):
            schurweylpy.Experiment(tag='none', experiment='eyd', seed=428,
                                   test=True)

    def test_experiment_instantiation(self):
        """Test that the archived run loads as an Experiment"""
        run = schurweylpy.Experiment(tag=self.tag, experiment=self.experiment,
                                     seed=self.seed, test=True)
        assert isinstance(run, schurweylpy.Experiment)
        assert run.config['alpha'] == '3/5,2/5'
        assert run.version[0] == 'schurweylpy v0.1.0'
        assert run.data.sizes['row'] == 2
        assert list(run.data['experiment'].values) == ['eyd', 'eyd_exact']

    def test_failed_criteria(self):
        """A passing run has no failed criteria"""
        run = schurweylpy.Experiment(tag=self.tag, experiment=self.experiment,
                                     seed=self.seed, test=True)
        assert run.failed_criteria() == []

    def test_experiment_repr(self):
        """Test that __repr__ returns a string of information."""
        run = schurweylpy.Experiment(tag=self.tag, experiment=self.experiment,
                                     seed=self.seed, test=True)
        out = run.__repr__()
        assert isinstance(out, str)
        assert 'alpha: 3/5,2/5' in out
        assert '2 criteria, 0 failed' in out

    def test_experiment_plot(self):
        """Basic test that the bound plot holds both reports"""
        import matplotlib.pyplot as plt

        run = schurweylpy.Experiment(tag=self.tag, experiment=self.experiment,
                                     seed=self.seed, test=True)
        ax = run.plot_bounds()
        assert isinstance(ax, matplotlib.axes.Axes)
        assert ax.get_xlabel() == 'report'
        assert ax.get_title() == 'test: eyd, seed 7'
        plt.close(ax.figure)


class TestArchivedRun():
    """Test loading runs archived in a temporary directory"""

    def setup_method(self):
        """Runs before every method to create a clean testing setup"""
        self.config = schurweylpy.ExperimentConfig.from_mapping(
            'dyck-bijection', {'n': 4, 'seed': 3, 'tag': 'scratch'})

    def teardown_method(self):
        """Runs after every method to clean up previous testing"""
        del self.config

    def test_archive_and_load(self, tmp_path, monkeypatch):
        """Runs archived by run_experiment load back"""
        monkeypatch.setattr(schurweylpy, 'test_data_dir', str(tmp_path))
        reports = schurweylpy.run_experiment(self.config, archive=True,
                                             test=True)
        run = schurweylpy.Experiment(tag='scratch',
                                     experiment='dyck-bijection', seed=3,
                                     test=True)
        assert run.data.sizes['row'] == len(reports)
        assert run.config['n'] == '4'
        assert run.failed_criteria() == []

    def test_failed_report(self, tmp_path, monkeypatch):
        """Failed criteria are listed by name"""
        monkeypatch.setattr(schurweylpy, 'test_data_dir', str(tmp_path))
        path = schurweylpy.utils.generate_path('scratch', 'eyd', 5, test=True)
        os.makedirs(path)
        write_config(os.path.join(path, 'experiment.namelist'),
                     {'experiment': 'eyd', 'n': 4, 'seed': 5})
        write_reports([BoundReport.from_exact('eyd', {'n': 4}, 0.6, 0.5,
                                              'E <= d/n')],
                      os.path.join(path, 'report.jsonl'))
        with open(os.path.join(path, 'version.txt'), 'w') as version_file:
            version_file.write('schurweylpy v0.1.0\n')
        run = schurweylpy.Experiment(tag='scratch', experiment='eyd', seed=5,
                                     test=True)
        assert run.failed_criteria() == ['E <= d/n']
        assert 'FAILED: E <= d/n' in repr(run)
