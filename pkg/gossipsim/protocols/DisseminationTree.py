# -*- coding: utf-8 -*-
#
# File : gossipsim/protocols/DisseminationTree.py
# Description : Dissemination tree of the memory-model algorithm.
# Date : 13th of March, 2025
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
from gossipsim.engine.Channel import Direction
from gossipsim.engine.MessageSet import MessageSet
from gossipsim.engine.World import World, MEMORY_SLOTS, SLOT_CHILD, SLOT_CONTACT, SLOT_RECEIPT

logger = logging.getLogger(__name__)


# Tree built by a broadcast of the leader's message
class DisseminationTree(object):
    """
    Builds, uses and replays the communication tree of the memory model on
    one World.

    build(): the leader's message is pushed over open-avoid channels in
    long-steps of four steps (a node first informed in long-step j pushes in
    long-step j + 1), then uninformed nodes pull it. Every push contact is
    stored in l_v[t mod 4] with its step, a pull receipt in l_v[0].

    gather(): time runs backwards over the stored links. Pull-informed nodes
    push their set to the node they pulled from; parents re-open their push
    links and the child answers (pull) when that link first informed it.
    Answered links are marked confirmed.

    rebroadcast(): the leader's set travels forward over the confirmed links
    and pull receipts, then nodes still missing it pull with open-avoid.
    """

    # Constructor
    def __init__(self, world, leader, constants, streams):
        """
        Constructor
        :param world: World (fresh)
        :param leader: Leader node
        :param constants: ProtocolConstants
        :param streams: RandomStreams of this tree
        """
        self.world = world
        self.leader = int(leader)
        self.constants = constants
        self.generator = streams.generator('memory')
        self.tail_generator = streams.generator('phase3')
        self.push_steps = constants.memory_phase1_push_steps
        self.pull_steps = constants.memory_phase1_pull_steps
        n = world.n

        # Leader's message
        self.leader_set = MessageSet.of([self.leader], world.origins)
        self.has_message = torch.zeros(n, dtype=torch.bool)
        self.has_message[self.leader] = True
        self.first_step = torch.full((n,), -1, dtype=torch.int64)

        # Tree links answered in the gathering phase
        self.confirmed = torch.zeros((n, MEMORY_SLOTS), dtype=torch.bool)

        # Holders of the gathered set
        self.broadcast = torch.zeros(n, dtype=torch.bool)
        self.gathered = None
    # end __init__

    ##############################################
    # PROPERTIES
    ##############################################

    # Phase I length
    @property
    def build_steps(self):
        """
        Push and pull steps of Phase I
        """
        return self.push_steps + self.pull_steps
    # end build_steps

    ##############################################
    # PUBLIC
    ##############################################

    # Phase I
    def build(self):
        """
        Broadcast the leader's message and record the links
        """
        world = self.world
        world.enter_phase('phase1')

        # Push long-steps
        for t in range(self.push_steps):
            long_step = t // MEMORY_SLOTS
            if long_step == 0:
                pushers = torch.tensor([self.leader], dtype=torch.int64)
            else:
                pushers = ((self.first_step >= 0) & (self.first_step // MEMORY_SLOTS == long_step - 1)).nonzero().view(-1)
            # end if
            world.begin_step()
            channels = world.open_avoid(pushers, self.generator)
            world.remember(channels.openers, t % MEMORY_SLOTS, channels.callees, t, SLOT_CHILD)
            delivered = world.send(channels, Direction.PUSH, payload=self.leader_set)
            world.end_step()
            self._receive(channels.callees[delivered], channels.openers[delivered], t)
        # end for

        # Pull steps
        for t in range(self.push_steps, self.build_steps):
            world.begin_step()
            channels = world.open_avoid((world.alive & ~self.has_message).nonzero().view(-1), self.generator)
            world.remember(channels.openers, t % MEMORY_SLOTS, channels.callees, t, SLOT_CONTACT)
            informed = self.has_message[channels.callees]
            delivered = world.send(channels, Direction.PULL, payload=self.leader_set, mask=informed)
            world.end_step()
            receivers, senders = channels.openers[delivered], channels.callees[delivered]
            self._receive(receivers, senders, t)
            world.remember(receivers, 0, senders, t, SLOT_RECEIPT)
        # end for

        logger.debug(u"tree of leader {}: {} of {} nodes informed in {} steps".format(
            self.leader, int(self.has_message.sum()), world.n, self.build_steps
        ))
    # end build

    # Phase II
    def gather(self):
        """
        Send every node's set back to the leader along the tree
        :return: MessageSet of the leader, None if the leader has failed
        """
        world = self.world
        world.enter_phase('phase2')
        if bool(world.failed[self.leader]):
            logger.debug(u"leader {} failed before the gathering phase".format(self.leader))
            return None
        # end if

        # Pull receipts, latest first
        for t in reversed(range(self.push_steps, self.build_steps)):
            world.begin_step()
            nodes = self._tagged(0, SLOT_RECEIPT, t)
            channels = world.open_addressed(nodes, world.memory[nodes, 0])
            world.send(channels, Direction.PUSH)
            world.end_step()
        # end for

        # Push links, latest first
        for t in reversed(range(self.build_steps)):
            slot = t % MEMORY_SLOTS
            world.begin_step()
            parents = self._tagged(slot, SLOT_CHILD, t)
            channels = world.open_addressed(parents, world.memory[parents, slot])
            answers = self.first_step[channels.callees] == t
            delivered = world.send(channels, Direction.PULL, mask=answers)
            world.end_step()
            self.confirmed[channels.openers[delivered], slot] = True
        # end for

        self.gathered = world.message_set(self.leader)
        logger.debug(u"leader {} gathered {} origins".format(self.leader, len(self.gathered)))
        return self.gathered
    # end gather

    # Phase III
    def rebroadcast(self, run_to_completion=True, step_cap=None):
        """
        Spread the leader's set: replay of the tree, then open-avoid pulls
        :param run_to_completion: Pull until every alive node has the set (or step_cap)
        :param step_cap: Maximum pull steps in run-to-completion mode
        """
        world = self.world
        world.enter_phase('phase3')
        self.broadcast[self.leader] = bool(world.alive[self.leader])

        # Replay
        for t in range(self.build_steps):
            world.begin_step()
            if t < self.push_steps:
                slot = t % MEMORY_SLOTS
                nodes = self._tagged(slot, SLOT_CHILD, t, self.confirmed[:, slot] & self.broadcast)
                channels = world.open_addressed(nodes, world.memory[nodes, slot])
                delivered = world.send(channels, Direction.PUSH)
                world.end_step()
                self.broadcast[channels.callees[delivered]] = True
            else:
                nodes = self._tagged(0, SLOT_RECEIPT, t, ~self.broadcast)
                channels = world.open_addressed(nodes, world.memory[nodes, 0])
                delivered = world.send(channels, Direction.PULL, mask=self.broadcast[channels.callees])
                world.end_step()
                self.broadcast[channels.openers[delivered]] = True
            # end if
        # end for

        # Pull tail
        limit = step_cap if run_to_completion else self.constants.memory_phase3_steps
        executed = 0
        while executed < limit and bool((world.alive & ~self.broadcast).any()):
            t = world.step_index + 1
            world.begin_step()
            channels = world.open_avoid((world.alive & ~self.broadcast).nonzero().view(-1), self.tail_generator)
            world.remember(channels.openers, t % MEMORY_SLOTS, channels.callees, t, SLOT_CONTACT)
            delivered = world.send(channels, Direction.PULL, mask=self.broadcast[channels.callees])
            world.end_step()
            self.broadcast[channels.openers[delivered]] = True
            executed += 1
        # end while
        logger.debug(u"rebroadcast reached {} nodes, {} pull steps".format(int(self.broadcast.sum()), executed))
    # end rebroadcast

    # Summary
    def summary(self):
        """
        Sizes of the tree
        """
        informed_by_push = (self.first_step >= 0) & (self.first_step < self.push_steps)
        informed_by_pull = self.first_step >= self.push_steps
        return OrderedDict([
            ('informed', int(self.has_message.sum())),
            ('informed_by_push', int(informed_by_push.sum())),
            ('informed_by_pull', int(informed_by_pull.sum())),
            ('confirmed_links', int(self.confirmed.sum())),
            ('gathered', len(self.gathered) if self.gathered is not None else 0),
            ('broadcast', int(self.broadcast.sum()))
        ])
    # end summary

    ##############################################
    # PRIVATE
    ##############################################

    # First receipt of the leader's message
    def _receive(self, receivers, senders, t):
        """
        Record first receipts at step t; with several senders the smallest is the provenance
        """
        if receivers.numel() == 0:
            return
        # end if
        first_sender = torch.full((self.world.n,), World.INF, dtype=torch.int64)
        first_sender.scatter_reduce_(0, receivers, senders, reduce='amin', include_self=True)
        newly = torch.unique(receivers)
        newly = newly[~self.has_message[newly]]
        self.has_message[newly] = True
        self.first_step[newly] = t
        self.world.provenance[newly, 0] = first_sender[newly]
        self.world.provenance[newly, 1] = t
    # end _receive

    # Alive nodes with a given memory entry
    def _tagged(self, slot, kind, t, extra=None):
        """
        Alive nodes whose l_v[slot] has the given kind and step tag
        """
        mask = self.world.alive & (self.world.memory_kinds[:, slot] == kind) & (self.world.memory_tags[:, slot] == t)
        if extra is not None:
            mask &= extra
        # end if
        return mask.nonzero().view(-1)
    # end _tagged

# end DisseminationTree
