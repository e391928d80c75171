#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Copyright (C) 2026, schurweylpy developers
# Full license can be found in License.md
# -----------------------------------------------------------------------------
"""Allows ``python -m schurweylpy``"""
import sys

from schurweylpy.cli import main

if __name__ == '__main__':
    sys.exit(main())
