# -*- coding: utf-8 -*-
#

# Imports
from .RunMetrics import RunMetrics, SCALARS
from .SweepSummary import SweepSummary
from .functional import exceedance, mark_steps_plus_one, record, robustness_ratio, summarize

__all__ = [
    'RunMetrics', 'SCALARS', 'SweepSummary', 'exceedance', 'mark_steps_plus_one', 'record', 'robustness_ratio',
    'summarize'
]
