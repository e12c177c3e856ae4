# -*- coding: utf-8 -*-
#
# File : gossipsim/protocols/Protocol.py
# Description : Base class of the gossiping protocols.
# Date : 9th of March, 2025
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
import torch
from gossipsim.engine.Channel import Direction
from gossipsim.engine.World import World
from gossipsim.failure.functional import apply
from gossipsim.utils.random_streams import RandomStreams
from .ProtocolConstants import ProtocolConstants
from .RunOutcome import RunOutcome

logger = logging.getLogger(__name__)


# Gossiping protocol
class Protocol(object):
    """
    A protocol driver: builds a World over a graph and runs per-step actions
    over it. Subclasses implement _run(); run() is deterministic given
    (graph, constants, seed).
    """

    # Algorithm name
    name = None

    # Phase at which "before Phase II" failures happen
    failure_phase = 'phase2'

    # Constructor
    def __init__(self, graph, constants=None, seed=0, failure_plan=None, run_to_completion=True, tracked=None,
                 watch=None, trace=False, timeline=False):
        """
        Constructor
        :param graph: Graph
        :param constants: ProtocolConstants (default: table values for graph.n)
        :param seed: Run seed
        :param failure_plan: FailurePlan or None
        :param run_to_completion: Last phase runs until completion (or the step cap)
        :param tracked: Origins followed exactly (default: all)
        :param watch: Origins followed step by step
        :param trace: Keep a channel trace
        :param timeline: Keep the informed fraction per step
        """
        self.graph = graph
        self.n = graph.n
        self.constants = constants if constants is not None else ProtocolConstants(self.n)
        self.seed = int(seed)
        self.streams = RandomStreams(self.seed)
        self.failure_plan = failure_plan
        self.run_to_completion = run_to_completion
        self.tracked = tracked
        self.watch = watch
        self.trace = trace
        self.timeline = timeline
        self.plan = None
    # end __init__

    ##############################################
    # PUBLIC
    ##############################################

    # Run
    def run(self):
        """
        Run the protocol
        :return: RunOutcome
        """
        outcome = self._run()
        logger.debug(u"{} n={} seed={}: {}".format(self.name, self.n, self.seed, outcome))
        return outcome
    # end run

    # Expected run length
    def horizon(self):
        """
        Number of steps of a typical run (spreads uniform_over_run failures)
        """
        return self.constants.step_cap
    # end horizon

    # Draw the victims
    def resolve_failures(self, leader=None):
        """
        Resolve the failure plan of the run under the "failure" stream
        :param leader: Leader to exclude
        :return: Victims tensor
        """
        if self.failure_plan is None or self.failure_plan.count == 0:
            self.plan = None
            return torch.zeros(0, dtype=torch.int64)
        # end if
        self.plan = self.failure_plan.resolve(self.n, self.streams.generator('failure'), leader, self.horizon())
        return self.plan.victims
    # end resolve_failures

    # New world
    def new_world(self, streams=None, include=None, failures=True):
        """
        World over the graph with the run's options
        :param streams: RandomStreams (default: the run's)
        :param include: Origins that must be tracked (leader, victims)
        :param failures: Hook the resolved failure plan
        :return: World
        """
        tracked = self.tracked
        if tracked is not None:
            extra = [torch.as_tensor(tracked, dtype=torch.int64).view(-1)]
            if self.plan is not None:
                extra.append(self.plan.victims)
            # end if
            if include is not None:
                extra.append(torch.as_tensor(include, dtype=torch.int64).view(-1))
            # end if
            tracked = torch.unique(torch.cat(extra))
        # end if
        world = World(
            self.graph,
            streams=streams if streams is not None else self.streams,
            tracked=tracked,
            watch=self.watch,
            trace=self.trace,
            timeline=self.timeline
        )
        if failures and self.plan is not None:
            apply(world, self.plan, self.failure_phase)
        # end if
        return world
    # end new_world

    # Outcome of a world
    def outcome(self, world, **kwargs):
        """
        RunOutcome filled from a finished world
        """
        outcome = RunOutcome(
            self.name,
            self.n,
            self.seed,
            constants=self.constants,
            victims=self.plan.victims.tolist() if self.plan is not None else [],
            **kwargs
        )
        return outcome.observe(world)
    # end outcome

    ##############################################
    # PRIVATE
    ##############################################

    # Protocol body
    def _run(self):
        """
        Run and return a RunOutcome
        """
        raise NotImplementedError
    # end _run

    # One push-pull step
    def _pushpull_step(self, world, generator):
        """
        Every alive node calls a uniform neighbor and both sides send their sets
        """
        world.begin_step()
        channels = world.open_uniform(world.alive.nonzero().view(-1), generator)
        world.send(channels, Direction.PUSH)
        world.send(channels, Direction.PULL)
        world.end_step()
    # end _pushpull_step

    # Push-pull loop
    def _pushpull(self, world, generator, steps, until_complete):
        """
        Push-pull steps
        :param world: World
        :param generator: Stream of the phase
        :param steps: Maximum number of steps
        :param until_complete: Stop as soon as gossiping is complete
        :return: Steps executed
        """
        executed = 0
        while executed < steps:
            if until_complete and world.is_complete():
                break
            # end if
            self._pushpull_step(world, generator)
            executed += 1
        # end while
        return executed
    # end _pushpull

# end Protocol
