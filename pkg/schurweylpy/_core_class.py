#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Copyright (C) 2026, schurweylpy developers
# Full license can be found in License.md
# -----------------------------------------------------------------------------
"""Loading of archived experiment runs

Classes
-------------------------------------------------------------------------------
Experiment
    Loads and holds the configuration and reports of an archived run
-------------------------------------------------------------------------------
"""
from os import path
import numpy as np
import xarray as xr
from schurweylpy.reports import read_reports
from schurweylpy.utils import generate_path, read_config


class Experiment(object):
    """Python object to handle an archived experiment run
    """
    def __init__(self, tag, experiment, seed, test=False):
        """Loads a previously archived run

        Parameters
        ----------
        tag : (string)
            name of the collection of runs (top-level directory)
        experiment : (string)
            experiment name, e.g. 'eyd' or 'coupling-verify'
        seed : (int)
            base seed of the run
        test : (boolean)
            if true : use test archive
            if false : look for user made archives

        Attributes
        ----------
        config : (dict)
            experiment.namelist contents, all values as strings
        version : (list of str)
            package version and git hash the run was produced with
        data : (xarray.Dataset)
            one entry per report along dimension 'row', variables as in the
            report schema

        Examples
        --------
        To load a previous run:
            run = schurweylpy.Experiment(tag='grid', experiment='eyd', seed=7)
        """
        self.tag = tag
        self.experiment = experiment
        self.seed = seed
        self.test = test

        self._load_experiment()

    def __repr__(self):
        """Make a printable representation of an Experiment object

        Returns
        -------
        out : (string)
            string containing a printable representation of an Experiment

        Examples
        --------
            run = schurweylpy.Experiment(tag='grid', experiment='eyd', seed=7)
            run
        """
        out = ['']
        out.append('Experiment Run Name = ' + self.tag)
        out.append('Experiment: {}, seed {:d}'.format(self.experiment,
                                                      self.seed))
        out.append(' '.join(self.version))

        out.append('\nParameters')
        out.append('----------')
        for key in sorted(self.config):
            if key not in ('experiment', 'seed', 'tag'):
                out.append('{}: {}'.format(key, self.config[key]))

        n_rows = self.data.sizes['row']
        failed = self.failed_criteria()
        out.append('\nReports')
        out.append('-------')
        out.append('{:d} criteria, {:d} failed'.format(n_rows, len(failed)))
        for name in failed:
            out.append('FAILED: ' + name)

        return '\n'.join(out)

    def _load_experiment(self):
        """Loads config, reports and version from the archive

        Returns
        -------
        void
            Experiment object modified in place
        """
        run_path = generate_path(self.tag, self.experiment.replace('-', '_'),
                                 self.seed, self.test)
        self.config = read_config(path.join(run_path, 'experiment.namelist'))
        with open(path.join(run_path, 'version.txt'), 'r') as version_file:
            self.version = [line.strip() for line in version_file
                            if line.strip()]

        frame = read_reports(path.join(run_path, 'report.jsonl'))
        frame.index.name = 'row'
        self.data = xr.Dataset.from_dataframe(frame)

    def failed_criteria(self):
        """Inequality names of the reports that did not pass

        Returns
        -------
        names : (list of str)
        """
        passed = self.data['pass'].values.astype(bool)
        return [str(name) for name in self.data['bound_name'].values[~passed]]

    def plot_bounds(self, ax=None):
        """Empirical mean against bound for every report

        Error bars are three standard errors; failed reports are drawn in
        red.

        Parameters
        ----------
        ax : (matplotlib.axes.Axes or NoneType)
            axes to draw on, a new figure when None (default=None)

        Returns
        -------
        ax : (matplotlib.axes.Axes)
        """
        import matplotlib.pyplot as plt

        if ax is None:
            _, ax = plt.subplots()
        rows = np.arange(self.data.sizes['row'])
        passed = self.data['pass'].values.astype(bool)
        colors = np.where(passed, 'tab:blue', 'tab:red')
        ax.errorbar(rows, self.data['empirical_mean'].values,
                    yerr=3 * self.data['std_error'].values, fmt='none',
                    ecolor='gray')
        ax.scatter(rows, self.data['empirical_mean'].values, c=colors,
                   label='empirical')
        ax.scatter(rows, self.data['bound'].values, marker='_', s=200,
                   c='k', label='bound')
        ax.set_xlabel('report')
        ax.set_ylabel('value')
        ax.set_title('{}: {}, seed {:d}'.format(self.tag, self.experiment,
                                                self.seed))
        ax.legend()
        return ax
