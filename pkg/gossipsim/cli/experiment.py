# -*- coding: utf-8 -*-
#
# File : gossipsim/cli/experiment.py
# Description : Sweep runner and result files.
# Date : 19th of March, 2025
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
import json
import logging
import os
import sys
from collections import OrderedDict
import pandas as pd
from torch.utils.data import DataLoader
from tqdm import tqdm
from gossipsim.metrics.RunMetrics import SCALARS
from gossipsim.metrics.SweepSummary import SweepSummary
from gossipsim.metrics.functional import exceedance, mark_steps_plus_one, robustness_ratio, summarize
from .ExperimentConfig import ExperimentConfig
from .ExperimentDataset import ExperimentDataset
from .cell import COLUMNS

# Logger
logger = logging.getLogger(__name__)

# Key of a summary row
CELL_KEY = ('algorithm', 'n', 'F')

# Thresholds of the exceedance plot
EXCEEDANCE_THRESHOLDS = (0, 10, 100)


# Keep items as they come
def _identity(item):
    return item
# end _identity


# Load and resolve a configuration
def validate_config(path):
    """
    Read a config file with every default materialized
    :param path: TOML file
    :return: ExperimentConfig
    """
    config = ExperimentConfig.load(path)
    logger.debug(u"{}: {} algorithms, {} sizes, {} failure counts, {} repetitions".format(
        path, len(config.algorithms), len(config.n_sweep), len(config.F_sweep), config.repetitions
    ))
    return config
# end validate_config


# Run a sweep
def run_experiment(config, out, jobs=0, emit_plotdata=False, trace=False, progress=True):
    """
    Run every cell of a sweep and write the result files into out:
    runs.csv, summary.csv, details.jsonl, config.toml, and optionally the
    plot data and the channel traces
    :param config: ExperimentConfig
    :param out: Output directory
    :param jobs: Worker processes (0 runs in this process)
    :param emit_plotdata: Write the plot CSVs
    :param trace: Write one channel trace per run
    :param progress: Show a progress bar on stderr
    :return: List of CellResult in cell order
    """
    os.makedirs(out, exist_ok=True)
    dataset = ExperimentDataset(config, trace=trace)
    loader = DataLoader(dataset, batch_size=None, shuffle=False, num_workers=jobs, collate_fn=_identity)
    logger.info(u"{} cells, {} jobs, results in {}".format(len(dataset), jobs, out))

    # Cells come back in index order
    results = list()
    for result in tqdm(loader, total=len(dataset), desc=u"cells", file=sys.stderr, disable=not progress):
        results.append(result)
    # end for

    done = [r for r in results if r.ok]
    write_runs(os.path.join(out, 'runs.csv'), done)
    write_summary(os.path.join(out, 'summary.csv'), done)
    write_details(os.path.join(out, 'details.jsonl'), done)
    with open(os.path.join(out, 'config.toml'), 'w') as f:
        f.write(config.describe())
    # end with
    if emit_plotdata:
        write_plotdata(out, done)
    # end if
    if trace or config.modes['trace']:
        write_traces(os.path.join(out, 'trace'), done)
    # end if

    failed = len(results) - len(done)
    if failed > 0:
        logger.error(u"{} of {} cells raised".format(failed, len(results)))
        for result in results:
            if not result.ok:
                logger.debug(result.failure)
            # end if
        # end for
    # end if
    return results
# end run_experiment


# Group results by (algorithm, n, F)
def group_cells(results):
    """
    OrderedDict (algorithm, n, F) -> results, in cell order
    """
    groups = OrderedDict()
    for result in results:
        key = (result.cell.algorithm, result.cell.n, result.cell.F)
        groups.setdefault(key, list()).append(result)
    # end for
    return groups
# end group_cells


# runs.csv
def write_runs(path, results):
    """
    One row per run, fixed column order
    """
    frame = pd.DataFrame([r.row for r in results], columns=list(COLUMNS))
    frame.to_csv(path, index=False)
# end write_runs


# summary.csv
def write_summary(path, results):
    """
    One row per (algorithm, n, F) with mean, stddev, min and max of every metric
    """
    columns = list(CELL_KEY) + ['repetitions']
    for metric in SCALARS:
        columns += [u"{}_{}".format(metric, s) for s in SweepSummary.STATISTICS]
    # end for
    columns.append('steps_plus_one_sufficient')
    rows = list()
    for key, group in group_cells(results).items():
        metrics = [r.metrics for r in group]
        row = summarize(metrics, key).to_row(CELL_KEY)
        row['steps_plus_one_sufficient'] = mark_steps_plus_one(metrics)
        rows.append(row)
    # end for
    pd.DataFrame(rows, columns=columns).to_csv(path, index=False)
# end write_summary


# details.jsonl
def write_details(path, results):
    """
    One JSON record per run: constants, victims, phase breakdown
    """
    with open(path, 'w') as f:
        for result in results:
            f.write(json.dumps(result.details, sort_keys=False))
            f.write(u"\n")
        # end for
    # end with
# end write_details


# Plot data
def write_plotdata(out, results):
    """
    plot_messages.csv (packets per node against n), plot_robustness.csv
    (additional lost per failure against F) and plot_exceedance.csv
    (percentage of runs above T additional lost, against F)
    """
    messages, robustness, exceed = list(), list(), list()
    for (algorithm, n, f), group in group_cells(results).items():
        metrics = [r.metrics for r in group]
        packets = summarize(metrics, (algorithm, n, f))
        messages.append(OrderedDict([
            ('algorithm', algorithm),
            ('n', n),
            ('F', f),
            ('runs', len(metrics)),
            ('avg_packets_per_node_mean', packets.get('avg_packets_per_node')),
            ('avg_packets_per_node_stddev', packets.get('avg_packets_per_node', 'stddev')),
            ('max_packets_per_node_max', packets.get('max_packets_per_node', 'max'))
        ]))
        lost = [m.additional_lost for m in metrics if m.additional_lost is not None]
        if len(lost) == 0:
            continue
        # end if
        ratios = [robustness_ratio(v, f) for v in lost]
        robustness.append(OrderedDict([
            ('algorithm', algorithm),
            ('n', n),
            ('F', f),
            ('runs', len(lost)),
            ('additional_lost_mean', sum(lost) / float(len(lost))),
            ('additional_lost_max', max(lost)),
            ('ratio_mean', sum(ratios) / float(len(ratios))),
            ('ratio_max', max(ratios))
        ]))
        for threshold in EXCEEDANCE_THRESHOLDS:
            exceed.append(OrderedDict([
                ('algorithm', algorithm),
                ('n', n),
                ('F', f),
                ('T', threshold),
                ('runs', len(lost)),
                ('percentage', exceedance(lost, threshold))
            ]))
        # end for
    # end for
    pd.DataFrame(messages, columns=[
        'algorithm', 'n', 'F', 'runs', 'avg_packets_per_node_mean', 'avg_packets_per_node_stddev',
        'max_packets_per_node_max'
    ]).to_csv(os.path.join(out, 'plot_messages.csv'), index=False)
    pd.DataFrame(robustness, columns=[
        'algorithm', 'n', 'F', 'runs', 'additional_lost_mean', 'additional_lost_max', 'ratio_mean', 'ratio_max'
    ]).to_csv(os.path.join(out, 'plot_robustness.csv'), index=False)
    pd.DataFrame(exceed, columns=['algorithm', 'n', 'F', 'T', 'runs', 'percentage']).to_csv(
        os.path.join(out, 'plot_exceedance.csv'), index=False
    )
# end write_plotdata


# Channel traces
def write_traces(directory, results):
    """
    One text file per run, one "step opener callee kind packets" line per channel
    """
    os.makedirs(directory, exist_ok=True)
    for result in results:
        if result.trace is None:
            continue
        # end if
        cell = result.cell
        name = u"{}_n{}_F{}_r{}.txt".format(cell.algorithm, cell.n, cell.F, cell.repetition)
        with open(os.path.join(directory, name), 'w') as f:
            for step, opener, callee, kind, packets in result.trace:
                f.write(u"{} {} {} {} {}\n".format(step, opener, callee, kind, packets))
            # end for
        # end with
    # end for
# end write_traces
