# -*- coding: utf-8 -*-
#
# File : gossipsim/metrics/functional.py
# Description : Recording and summarizing metrics.
# Date : 17th of March, 2025
#
# This file is part of gossipsim.  gossipsim is free software: you can
# redistribute it and/or modify it under the terms of the GNU General Public
# License as published by the Free Software Foundation, version 2.
#
# This program is distributed in the hope that it will be useful, but WITHOUT
# ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS
# FOR A PARTICULAR PURPOSE.  See the GNU General Public License for more
# details.
#
# You should have received a copy of the GNU General Public License along with
# this program; if not, write to the Free Software Foundation, Inc., 51
# Franklin Street, Fifth Floor, Boston, MA 02110-1301 USA.

# Imports
from collections import OrderedDict
import numpy as np
from .RunMetrics import RunMetrics, SCALARS
from .SweepSummary import SweepSummary


# Extract the metrics of a run
def record(run):
    """
    Metrics of a finished run; pure, draws no randomness
    :param run: RunOutcome
    :return: RunMetrics
    """
    per_phase = OrderedDict((name, account.to_dict()) for name, account in run.phases.items())
    max_packets = int(run.packets_per_node.max()) if run.packets_per_node.numel() > 0 else 0
    return RunMetrics(
        algorithm=run.algorithm,
        n=run.n,
        seed=run.seed,
        steps=run.steps_used,
        channels_opened=run.account.channels_opened,
        packets_sent=run.account.packets_sent,
        max_packets_per_node=max_packets,
        completed=bool(run.completed),
        per_phase=per_phase,
        informed_fraction_timeline=list(run.timeline) if run.timeline is not None else None,
        additional_lost=run.additional_lost,
        error=run.error,
        leader=run.leader
    )
# end record


# Summarize the runs of a cell
def summarize(runs, key):
    """
    Sample statistics (unbiased standard deviation, 0 for a single run)
    :param runs: List of RunMetrics sharing the key
    :param key: Group key
    :return: SweepSummary
    """
    if len(runs) == 0:
        raise ValueError(u"cannot summarize an empty list of runs")
    # end if
    statistics = OrderedDict()
    for name in SCALARS:
        values = [getattr(m, name) for m in runs if getattr(m, name) is not None]
        if len(values) == 0:
            continue
        # end if
        values = np.asarray(values, dtype=np.float64)
        statistics[name] = OrderedDict([
            ('mean', float(np.mean(values))),
            ('stddev', float(np.std(values, ddof=1)) if values.size > 1 else 0.0),
            ('min', float(np.min(values))),
            ('max', float(np.max(values)))
        ])
    # end for
    return SweepSummary(key, len(runs), statistics)
# end summarize


# Would the fastest time plus one step have been enough?
def mark_steps_plus_one(runs):
    """
    Set steps_plus_one_sufficient on the runs of a cell: a fixed budget of
    (fewest steps among completed runs + 1) covers the run
    :param runs: List of RunMetrics of one cell
    :return: True if it covers every completed run
    """
    completed = [m.steps for m in runs if m.completed]
    if len(completed) == 0:
        for m in runs:
            m.steps_plus_one_sufficient = False
        # end for
        return False
    # end if
    budget = min(completed) + 1
    for m in runs:
        m.steps_plus_one_sufficient = bool(m.completed and m.steps <= budget)
    # end for
    return all(m.steps_plus_one_sufficient for m in runs if m.completed)
# end mark_steps_plus_one


# Robustness ratio
def robustness_ratio(additional_lost, failures):
    """
    additional_lost / F, 0 when F = 0
    """
    if failures == 0:
        return 0.0
    # end if
    return float(additional_lost) / float(failures)
# end robustness_ratio


# Percentage of runs above a threshold
def exceedance(values, threshold):
    """
    Percentage of values strictly above threshold
    :param values: Additional lost counts of the runs of a cell
    :param threshold: T
    :return: Percentage in [0, 100]
    """
    values = np.asarray([v for v in values if v is not None], dtype=np.float64)
    if values.size == 0:
        return 0.0
    # end if
    return float(100.0 * np.mean(values > threshold))
# end exceedance
