# -*- coding: utf-8 -*-
#
# File : gossipsim/protocols/MemoryGossipingTwice.py
# Description : Memory-model gossiping over independent trees.
# Date : 15th of March, 2025
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
from .DisseminationTree import DisseminationTree
from .MemoryGossiping import MemoryGossiping
from .RunOutcome import LEADER_FAILED, STEP_CAP_EXCEEDED

logger = logging.getLogger(__name__)


# Several independent trees
class MemoryGossipingTwice(MemoryGossiping):
    """
    Phases I and II of the memory model run on tree_count independent trees
    (fresh random streams, same leader, same victims). A healthy origin is
    saved if it reaches the leader in at least one tree. Phase III spreads
    the union of the gathered sets over the first tree.
    """

    name = 'memory_twice'

    # Constructor
    def __init__(self, graph, constants=None, seed=0, tree_count=2, **kwargs):
        """
        Constructor
        :param tree_count: Number of independent trees (two executions by default)
        """
        super(MemoryGossipingTwice, self).__init__(graph, constants, seed, **kwargs)
        self.tree_count = int(tree_count)
    # end __init__

    # Run
    def _run(self):
        """
        Build and gather on every tree, rebroadcast the union
        """
        leader = self._choose_leader()
        if leader is None:
            return self._election_failed()
        # end if
        self.resolve_failures(leader)
        worlds = [
            self.new_world(streams=self.streams.child(u"tree{}".format(i)), include=[leader])
            for i in range(self.tree_count)
        ]
        first = worlds[0]
        if self.n < 2:
            return self._finish(self.outcome(
                first, completed=True, leader=leader, gathered_at_leader=first.message_set(leader), additional_lost=0
            ))
        # end if

        # Phases I and II, tree by tree
        trees = list()
        gathered = list()
        for world in worlds:
            tree = DisseminationTree(world, leader, self.constants, world.streams)
            tree.build()
            trees.append(tree)
            gathered.append(tree.gather())
        # end for
        if any(g is None for g in gathered):
            outcome = self.outcome(first, completed=False, leader=leader, error=LEADER_FAILED)
            for world in worlds[1:]:
                outcome.absorb(world)
            # end for
            return self._finish(outcome)
        # end if

        # Union at the leader
        union = gathered[0]
        for g in gathered[1:]:
            union = union | g
        # end for
        lost = self._lost(first, union)
        logger.debug(u"{} trees gathered {} origins, {} healthy origins lost".format(
            self.tree_count, [len(g) for g in gathered], lost
        ))

        # Phase III on the first tree
        first.set_message_set(leader, union)
        trees[0].rebroadcast(self.run_to_completion, self.constants.step_cap)
        completed = first.is_complete()
        outcome = self.outcome(
            first,
            completed=completed,
            leader=leader,
            gathered_at_leader=union,
            additional_lost=lost,
            error=STEP_CAP_EXCEEDED if self.run_to_completion and not completed else None
        )
        for world in worlds[1:]:
            outcome.absorb(world)
        # end for
        outcome.extra['gathered_per_tree'] = [len(g) for g in gathered]
        outcome.extra['trees'] = [tree.summary() for tree in trees]
        return self._finish(outcome)
    # end _run

# end MemoryGossipingTwice
