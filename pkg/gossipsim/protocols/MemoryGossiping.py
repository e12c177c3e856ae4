# -*- coding: utf-8 -*-
#
# File : gossipsim/protocols/MemoryGossiping.py
# Description : Gossiping in the memory model.
# Date : 14th of March, 2025
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
from collections import OrderedDict
import torch
from gossipsim.utils.bitsets import popcount
from gossipsim.utils.random_streams import derive_seed
from .DisseminationTree import DisseminationTree
from .LeaderElection import LeaderElection
from .Protocol import Protocol
from .RunOutcome import LEADER_FAILED, STEP_CAP_EXCEEDED

logger = logging.getLogger(__name__)


# Memory-model gossiping
class MemoryGossiping(Protocol):
    """
    Gossiping with a memory of four links per node: the leader's broadcast
    builds a tree (Phase I), every set flows back to the leader along the
    tree (Phase II), and the leader's gathered set is broadcast again over
    the same links (Phase III).
    """

    name = 'memory'

    # Constructor
    def __init__(self, graph, constants=None, seed=0, leader=None, leader_election=False, **kwargs):
        """
        Constructor
        :param graph: Graph
        :param constants: ProtocolConstants
        :param seed: Run seed
        :param leader: Leader node (default: uniform under the "leader" stream)
        :param leader_election: Elect the leader first, its packets are added
        """
        super(MemoryGossiping, self).__init__(graph, constants, seed, **kwargs)
        self.leader = leader
        self.leader_election = leader_election
        self.election = None
        self.election_outcome = None
    # end __init__

    ##############################################
    # PUBLIC
    ##############################################

    # Expected run length
    def horizon(self):
        """
        Phase I, Phase II (one backward pass per loop) and the replay
        """
        c = self.constants
        build = c.memory_phase1_push_steps + c.memory_phase1_pull_steps
        return build + c.memory_phase1_pull_steps + build + build + c.memory_phase3_steps
    # end horizon

    ##############################################
    # PRIVATE
    ##############################################

    # Run
    def _run(self):
        """
        Run the three phases on one tree
        """
        leader = self._choose_leader()
        if leader is None:
            return self._election_failed()
        # end if
        self.resolve_failures(leader)
        world = self.new_world(include=[leader])
        if self.n < 2:
            return self._finish(self.outcome(world, completed=True, leader=leader, gathered_at_leader=world.message_set(leader)))
        # end if

        tree = DisseminationTree(world, leader, self.constants, self.streams)
        tree.build()
        gathered = tree.gather()
        if gathered is None:
            return self._finish(self.outcome(world, completed=False, leader=leader, error=LEADER_FAILED))
        # end if
        lost = self._lost(world, gathered)
        tree.rebroadcast(self.run_to_completion, self.constants.step_cap)

        completed = world.is_complete()
        outcome = self.outcome(
            world,
            completed=completed,
            leader=leader,
            gathered_at_leader=gathered,
            additional_lost=lost,
            error=STEP_CAP_EXCEEDED if self.run_to_completion and not completed else None
        )
        outcome.extra['tree'] = tree.summary()
        return self._finish(outcome)
    # end _run

    # Pick the leader
    def _choose_leader(self):
        """
        Given leader, elected leader, or uniform node
        :return: Node, None when the election has no unique leader
        """
        if self.leader is not None:
            return int(self.leader)
        # end if
        if self.leader_election:
            self.election = LeaderElection(self.graph, self.constants, derive_seed(self.seed, 'leader_election'))
            self.election_outcome = self.election.run()
            return self.election_outcome.leader
        # end if
        return int(torch.randint(self.n, (1,), generator=self.streams.generator('leader'))[0])
    # end _choose_leader

    # Outcome when no leader was elected
    def _election_failed(self):
        """
        Report the election's error
        """
        result = self.election_outcome
        outcome = self.outcome(self.election.world, completed=False, error=result.error or LEADER_FAILED)
        outcome.phases = OrderedDict(('leader_election.' + k, v) for k, v in outcome.phases.items())
        outcome.extra['leader_election'] = result.extra
        return outcome
    # end _election_failed

    # Add the election to an outcome
    def _finish(self, outcome):
        """
        Add the election's packets and steps
        """
        if self.election is not None:
            outcome.absorb(self.election.world, prefix='leader_election')
            outcome.steps_used += self.election.world.steps
            outcome.extra['leader_election'] = self.election_outcome.extra
        # end if
        return outcome
    # end _finish

    # Healthy origins missing from a gathered set
    def _lost(self, world, gathered):
        """
        Tracked origins of alive nodes that the gathered set misses
        """
        required = world.required_row()
        missing = required & ~gathered.row
        return int(popcount(missing))
    # end _lost

# end MemoryGossiping
