#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Copyright (C) 2026, schurweylpy developers
# Full license can be found in License.md
# -----------------------------------------------------------------------------
"""
schurweylpy - spectrum estimation and tomography from Schur-Weyl sampling
=========================================================================

schurweylpy samples Young diagrams from the Schur-Weyl distribution of an
unknown spectrum, estimates the spectrum (empirical Young diagram) and the
state itself (Keyl's measurement, PCA), and checks the bounds these
estimators satisfy by exact enumeration and seeded Monte Carlo.  It also
implements the RSK and Dyck path couplings used to compare the
distributions of different spectra.  Every check produces a BoundReport;
runs are configured, seeded and archived like experiments.

"""
import logging
import sys
import os

__version__ = str('0.1.0')

# get home directory
home_dir = os.path.expanduser('~')
# get virtual environment directory
env_name = os.path.split(sys.prefix)[-1]
# settings directory with environment subdirectory
schurweylpy_dir = os.path.join(home_dir, '.schurweylpy', env_name)
if not os.path.isdir(schurweylpy_dir):
    os.makedirs(schurweylpy_dir)
    print('Created {} directory to store settings.'.format(schurweylpy_dir))

archive_path = os.path.join(schurweylpy_dir, 'archive_path.txt')
if os.path.isfile(archive_path):
    # load up stored archive path
    with open(archive_path, 'r') as f:
        archive_dir = f.readline().strip()
else:
    with open(archive_path, 'w+') as f:
        f.write('')
    archive_dir = ''
    print('Run schurweylpy.utils.set_archive_dir to set the path to'
          ' top-level directory for experiment archives.')

# flag, True if on readthedocs
on_rtd = os.environ.get('READTHEDOCS') == 'True'

test_data_path = os.path.join(schurweylpy_dir, 'test_data_path.txt')
test_data_dir = os.path.join(os.path.dirname(os.path.abspath(__file__)),
                             'tests', 'test_data')
if not on_rtd and os.path.isfile(test_data_path):
    with open(test_data_path, 'r') as f:
        test_data_dir = f.readline().strip() or test_data_dir


# import main functions
try:
    from schurweylpy import _core, _core_class, utils  # noqa: F401
    from schurweylpy._core import (ExperimentConfig, run_experiment,  # noqa
                                   verify_all)
    from schurweylpy._core_class import Experiment  # noqa: F401
    from schurweylpy.reports import BoundReport  # noqa: F401
except ImportError as errstr:
    logging.exception('problem importing schurweylpy: ' + str(errstr))
