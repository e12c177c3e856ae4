# -*- coding: utf-8 -*-
#

# Imports
from .ExperimentConfig import ExperimentConfig, FULL_BITSET_LIMIT, SCHEMA
from .ExperimentDataset import ExperimentDataset
from .cell import Cell, CellResult, COLUMNS, SCHEMA_VERSION, cell_seed, run_cell
from .experiment import run_experiment, validate_config, write_plotdata, write_runs, write_summary
from .main import build_parser, main


__all__ = [
    'ExperimentConfig', 'FULL_BITSET_LIMIT', 'SCHEMA', 'ExperimentDataset', 'Cell', 'CellResult', 'COLUMNS',
    'SCHEMA_VERSION', 'cell_seed', 'run_cell', 'run_experiment', 'validate_config', 'write_plotdata', 'write_runs',
    'write_summary', 'build_parser', 'main'
]
