# -*- coding: utf-8 -*-
#
# File : gossipsim/protocols/LeaderElection.py
# Description : Leader election by minimum candidate identifier.
# Date : 12th of March, 2025
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
from gossipsim.engine.World import World, MEMORY_SLOTS, SLOT_CONTACT
from .Protocol import Protocol
from .RunOutcome import NO_CANDIDATE

logger = logging.getLogger(__name__)


# Leader election
class LeaderElection(Protocol):
    """
    Nodes become candidates with probability log^2 n / n. Active nodes push
    the smallest identifier they know over open-avoid channels and activate
    their callees; then every node pulls the smallest identifier of its
    callee. The candidate whose identifier is still its own minimum is the
    leader.
    """

    name = 'leader_election'
    failure_phase = 'leader_push'

    # Constructor
    def __init__(self, *args, **kwargs):
        """
        Constructor, see Protocol
        """
        super(LeaderElection, self).__init__(*args, **kwargs)
        self.world = None
        self.candidates = None
    # end __init__

    ##############################################
    # PUBLIC
    ##############################################

    # Expected run length
    def horizon(self):
        """
        Push and pull steps
        """
        return self.constants.leader_push_steps + self.constants.leader_pull_steps
    # end horizon

    ##############################################
    # PRIVATE
    ##############################################

    # Run
    def _run(self):
        """
        Elect a leader
        """
        self.resolve_failures()
        world = self.new_world()
        self.world = world
        ids = torch.arange(self.n, dtype=torch.int64)

        # A single node leads itself
        if self.n < 2:
            world.values[0] = 0
            return self.outcome(world, completed=True, leader=0)
        # end if

        # Candidates
        candidates = self.streams.bernoulli('candidates', self.constants.leader_probability, self.n)
        self.candidates = candidates
        if not bool(candidates.any()):
            logger.debug(u"no candidate among {} nodes".format(self.n))
            return self.outcome(world, completed=False, error=NO_CANDIDATE)
        # end if
        world.values[candidates] = ids[candidates]
        world.active = candidates.clone()

        # Push phase
        world.enter_phase('leader_push')
        generator = self.streams.generator('leader_election')
        push_steps = self.constants.leader_push_steps
        for t in range(push_steps):
            world.begin_step()
            channels = world.open_avoid((world.active & world.alive).nonzero().view(-1), generator)
            world.remember(channels.openers, t % MEMORY_SLOTS, channels.callees, t, SLOT_CONTACT)
            delivered = world.send_values(channels, Direction.PUSH)
            world.end_step()
            world.active[channels.callees[delivered]] = True
        # end for

        # Pull phase
        world.enter_phase('leader_pull')
        for t in range(push_steps, push_steps + self.constants.leader_pull_steps):
            world.begin_step()
            channels = world.open_avoid(world.alive.nonzero().view(-1), generator)
            world.remember(channels.openers, t % MEMORY_SLOTS, channels.callees, t, SLOT_CONTACT)
            world.send_values(channels, Direction.PULL, mask=world.values[channels.callees] < World.INF)
            world.end_step()
        # end for

        # Who leads
        leader = self._leader(world, candidates)
        completed = leader is not None and bool((world.values[world.alive] == leader).all())
        outcome = self.outcome(world, completed=completed, leader=leader)
        outcome.extra['candidates'] = int(candidates.sum())
        outcome.extra['self_identified'] = int((world.alive & (world.values == ids)).sum())
        return outcome
    # end _run

    # Unique correct leader
    def _leader(self, world, candidates):
        """
        The leader, when exactly one node self-identifies and it is the
        smallest alive candidate
        :return: Node or None
        """
        ids = torch.arange(self.n, dtype=torch.int64)
        self_identified = (world.alive & (world.values == ids)).nonzero().view(-1)
        alive_candidates = (candidates & world.alive).nonzero().view(-1)
        if alive_candidates.numel() == 0 or self_identified.numel() != 1:
            return None
        # end if
        leader = int(self_identified[0])
        return leader if leader == int(alive_candidates[0]) else None
    # end _leader

# end LeaderElection
