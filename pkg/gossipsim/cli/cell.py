# -*- coding: utf-8 -*-
#
# File : gossipsim/cli/cell.py
# Description : Running one cell of a sweep.
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
import logging
import time
import traceback
from collections import OrderedDict, namedtuple
import torch
from gossipsim.protocols.MemoryGossiping import MemoryGossiping
from gossipsim.protocols.MemoryGossipingTwice import MemoryGossipingTwice
from gossipsim.protocols.RunOutcome import NO_CANDIDATE
from gossipsim.protocols.functional import PROTOCOLS
from gossipsim.utils.random_streams import RandomStreams, derive_seed

# Logger
logger = logging.getLogger(__name__)

# Version of the runs.csv layout
SCHEMA_VERSION = 1

# runs.csv columns, new columns are appended
COLUMNS = (
    'schema_version', 'algorithm', 'n', 'p_or_d', 'F', 'seed', 'repetition', 'steps', 'channels_opened',
    'packets_sent', 'avg_packets_per_node', 'max_packets_per_node', 'completed', 'additional_lost', 'wallclock_ms'
)

# Reruns after an election without candidates
MAX_RERUNS = 8

# One (algorithm, n, F, repetition) cell of a sweep
Cell = namedtuple('Cell', ['index', 'algorithm', 'n', 'F', 'repetition'])


# Result of a cell
class CellResult(object):
    """
    CSV row, JSON detail record, metrics and trace of a cell; failure holds
    the traceback when the cell raised
    """

    # Constructor
    def __init__(self, cell, seed, row=None, details=None, metrics=None, trace=None, failure=None):
        self.cell = cell
        self.seed = seed
        self.row = row
        self.details = details
        self.metrics = metrics
        self.trace = trace
        self.failure = failure
    # end __init__

    # Did the cell run?
    @property
    def ok(self):
        """
        No exception in the cell
        """
        return self.failure is None
    # end ok

# end CellResult


# Seed of a cell
def cell_seed(master_seed, algorithm, n, f, repetition):
    """
    Sub-seed of a cell, independent of the sweep order
    :return: Integer seed
    """
    return derive_seed(master_seed, algorithm, n, f, repetition)
# end cell_seed


# Tracked origins of a cell
def tracked_origins(size, n, streams):
    """
    Sorted sample of size origins under the "tracked" stream, None to track all
    """
    if size is None or int(size) >= n:
        return None
    # end if
    return torch.sort(torch.randperm(n, generator=streams.generator('tracked'))[:int(size)])[0]
# end tracked_origins


# Protocol options of a cell
def protocol_options(config, algorithm, n, f, streams, trace=False):
    """
    Keyword arguments of the protocol driver
    """
    modes = config.modes
    options = dict(
        failure_plan=config.failure_plan(f) if f > 0 else None,
        run_to_completion=bool(modes['run_to_completion']),
        tracked=tracked_origins(modes['tracked_subset_size'], n, streams),
        trace=bool(trace or modes['trace']),
        timeline=bool(modes['timeline'])
    )
    driver = PROTOCOLS[algorithm]
    if issubclass(driver, MemoryGossiping):
        options['leader_election'] = bool(modes['leader_election'])
    # end if
    if issubclass(driver, MemoryGossipingTwice):
        options['tree_count'] = int(modes['tree_count'])
    # end if
    return options
# end protocol_options


# Run a cell
def run_cell(config, cell, trace=False):
    """
    Generate the graph and run the protocol of a cell. An election without
    candidates is rerun on the same graph with the next sub-seed.
    :param config: ExperimentConfig
    :param cell: Cell
    :param trace: Keep the channel trace
    :return: CellResult
    """
    seed = cell_seed(config.master_seed, cell.algorithm, cell.n, cell.F, cell.repetition)
    try:
        model = config.graph_model(cell.n)
        constants = config.constants_for(cell.n)
        streams = RandomStreams(seed)
        options = protocol_options(config, cell.algorithm, cell.n, cell.F, streams, trace)
        start = time.perf_counter()
        graph = model.generate(derive_seed(seed, 'graph'))
        run_seed = seed
        outcome = PROTOCOLS[cell.algorithm](graph, constants, run_seed, **options).run()
        attempt = 0
        while outcome.error == NO_CANDIDATE and attempt < MAX_RERUNS:
            attempt += 1
            logger.warning(u"cell {}: no leader candidate, rerun {}".format(cell.index, attempt))
            run_seed = derive_seed(seed, 'rerun', attempt)
            outcome = PROTOCOLS[cell.algorithm](graph, constants, run_seed, **options).run()
        # end while
        elapsed = (time.perf_counter() - start) * 1000.0
    except Exception:
        logger.error(u"cell {} ({}, n={}, F={}, repetition {}) raised".format(
            cell.index, cell.algorithm, cell.n, cell.F, cell.repetition
        ))
        return CellResult(cell, seed, failure=traceback.format_exc())
    # end try

    metrics = outcome.metrics
    row = OrderedDict([
        ('schema_version', SCHEMA_VERSION),
        ('algorithm', cell.algorithm),
        ('n', cell.n),
        ('p_or_d', model.parameter),
        ('F', cell.F),
        ('seed', seed),
        ('repetition', cell.repetition),
        ('steps', metrics.steps),
        ('channels_opened', metrics.channels_opened),
        ('packets_sent', metrics.packets_sent),
        ('avg_packets_per_node', metrics.avg_packets_per_node),
        ('max_packets_per_node', metrics.max_packets_per_node),
        ('completed', metrics.completed),
        ('additional_lost', metrics.additional_lost),
        ('wallclock_ms', round(elapsed, 3) if config.modes['wallclock'] else None)
    ])
    details = OrderedDict([
        ('cell', cell.index),
        ('algorithm', cell.algorithm),
        ('n', cell.n),
        ('F', cell.F),
        ('repetition', cell.repetition),
        ('seed', seed),
        ('run_seed', run_seed),
        ('graph', OrderedDict([('kind', model.kind.value), ('parameter', model.parameter)])),
        ('constants_hash', config.constants_hash(cell.n)),
        ('constants', constants.to_dict()),
        ('failure', options['failure_plan'].to_dict() if options['failure_plan'] is not None else None),
        ('victims', list(outcome.victims)),
        ('leader', outcome.leader),
        ('error', outcome.error),
        ('phases', metrics.per_phase),
        ('walk_rounds', outcome.walk_rounds),
        ('extra', outcome.extra)
    ])
    if outcome.timeline is not None:
        details['informed_fraction_timeline'] = list(outcome.timeline)
    # end if
    if outcome.watch is not None:
        details['watch'] = outcome.watch
    # end if

    if outcome.error is not None:
        logger.warning(u"cell {} ({}, n={}, F={}, repetition {}): {}".format(
            cell.index, cell.algorithm, cell.n, cell.F, cell.repetition, outcome.error
        ))
    # end if
    logger.info(u"cell {} ({}, n={}, F={}, repetition {}): {} steps, {} packets, completed={}".format(
        cell.index, cell.algorithm, cell.n, cell.F, cell.repetition, metrics.steps, metrics.packets_sent,
        metrics.completed
    ))
    return CellResult(cell, seed, row, details, metrics, outcome.trace)
# end run_cell
