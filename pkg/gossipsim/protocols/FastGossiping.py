# -*- coding: utf-8 -*-
#
# File : gossipsim/protocols/FastGossiping.py
# Description : Fast-gossiping with parallel random walks.
# Date : 11th of March, 2025
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
from .Protocol import Protocol
from .RunOutcome import STEP_CAP_EXCEEDED
from .WalkToken import WalkQueue, WalkToken

logger = logging.getLogger(__name__)


# Fast-gossiping
class FastGossiping(Protocol):
    """
    Three phases. Phase I: every node pushes its set for a few steps.
    Phase II: rounds of random walks; a node starts a walk with probability
    ell/log n, nodes forward one queued walk per step (FIFO), walks retire at
    the moves cap, then nodes holding walks become active and broadcast for a
    few steps. Phase III: push-pull.
    """

    name = 'fast'

    # Constructor
    def __init__(self, *args, **kwargs):
        """
        Constructor, see Protocol
        """
        super(FastGossiping, self).__init__(*args, **kwargs)
        self.walk_rounds = list()
    # end __init__

    ##############################################
    # PUBLIC
    ##############################################

    # Expected run length
    def horizon(self):
        """
        Phase I + Phase II + fixed Phase III
        """
        c = self.constants
        return c.phase1_steps + c.phase2_rounds * (1 + c.phase2_walk_steps + c.phase2_bcast_steps) + c.phase3_steps
    # end horizon

    ##############################################
    # PRIVATE
    ##############################################

    # Run
    def _run(self):
        """
        Run the three phases
        """
        c = self.constants
        self.resolve_failures()
        world = self.new_world()
        if self.n < 2:
            outcome = self.outcome(world, completed=world.is_complete())
            return outcome
        # end if

        # Phase I
        world.enter_phase('phase1')
        self._phase1(world)

        # Phase II
        world.enter_phase('phase2')
        world.queues = WalkQueue(self.n, c.moves_cap)
        for r in range(c.phase2_rounds):
            self._phase2_round(world, r)
        # end for

        # Phase III
        world.enter_phase('phase3')
        generator = self.streams.generator('phase3')
        if self.run_to_completion:
            self._pushpull(world, generator, c.step_cap, True)
        else:
            self._pushpull(world, generator, c.phase3_steps, False)
        # end if

        completed = world.is_complete()
        error = STEP_CAP_EXCEEDED if self.run_to_completion and not completed else None
        outcome = self.outcome(world, completed=completed, error=error)
        outcome.walk_rounds = self.walk_rounds
        return outcome
    # end _run

    # Phase I
    def _phase1(self, world):
        """
        Every node pushes m_v
        """
        generator = self.streams.generator('phase1')
        for t in range(self.constants.phase1_steps):
            world.begin_step()
            channels = world.open_uniform(world.alive.nonzero().view(-1), generator)
            world.send(channels, Direction.PUSH)
            world.end_step()
        # end for
    # end _phase1

    # One round of Phase II
    def _phase2_round(self, world, r):
        """
        Walk starts, walk forwarding, activation and broadcast
        :param world: World
        :param r: Round index
        """
        c = self.constants
        walks = self.streams.generator('walks')
        queues = world.queues
        stats = OrderedDict([('round', r), ('started', 0), ('retired', 0), ('resident', 0), ('dropped', 0)])

        # Walk starts, the first move counts
        starting = self.streams.bernoulli('walk_starts', c.walk_probability, self.n) & world.alive
        world.begin_step()
        channels = world.open_uniform(starting.nonzero().view(-1), walks)
        tokens = [WalkToken(None, 0, world.step_index, v) for v in channels.openers.tolist()]
        stats['started'] = len(tokens)
        self._move_tokens(world, channels, tokens, stats)

        # Forwarding, one token per node and step
        for t in range(c.phase2_walk_steps):
            world.begin_step()
            holders = (queues.nonempty & world.alive).nonzero().view(-1)
            channels = world.open_uniform(holders, walks)
            tokens = queues.pop(channels.openers.tolist())
            self._move_tokens(world, channels, tokens, stats)
        # end for

        # Activation
        world.active = queues.nonempty & world.alive
        broadcast = self.streams.generator('broadcast')
        for t in range(c.phase2_bcast_steps):
            world.begin_step()
            channels = world.open_uniform(world.active.nonzero().view(-1), broadcast)
            delivered = world.send(channels, Direction.PUSH)
            world.end_step()
            world.active[channels.callees[delivered]] = True
            world.active &= world.alive
        # end for

        # Round end
        stats['active'] = int(world.active.sum())
        stats['resident'] = queues.clear()
        world.active = torch.zeros(self.n, dtype=torch.bool)
        self.walk_rounds.append(stats)
        logger.debug(u"round {}: {} walks started, {} retired, {} resident, {} dropped, {} active".format(
            r, stats['started'], stats['retired'], stats['resident'], stats['dropped'], stats['active']
        ))
    # end _phase2_round

    # Push tokens and handle arrivals
    def _move_tokens(self, world, channels, tokens, stats):
        """
        Push each token over its channel (one more move), end the step, then
        enqueue arrivals with m' | m_v or retire them at the moves cap
        :param world: World (step open)
        :param channels: ChannelBatch, channel i carries tokens[i]
        :param tokens: List of WalkToken (payload None: the opener's set)
        :param stats: Round statistics
        """
        k = len(tokens)
        if k > 0:
            own = world.msgs[channels.openers]
            payloads = torch.stack([tok.payload if tok.payload is not None else own[i] for i, tok in enumerate(tokens)])
        else:
            payloads = world.msgs[channels.openers]
        # end if
        delivered = world.send(channels, Direction.PUSH, payload=payloads)

        # Receivers' sets at the start of the step
        receivers = channels.callees[delivered]
        merged = payloads[delivered] | world.msgs[receivers]
        world.end_step()

        stats['dropped'] += int((~delivered).sum())
        arrivals = list()
        nodes = list()
        for j, i in enumerate(delivered.nonzero().view(-1).tolist()):
            moves = tokens[i].moves + 1
            if moves >= self.constants.moves_cap:
                stats['retired'] += 1
            else:
                nodes.append(int(receivers[j]))
                arrivals.append(WalkToken(merged[j], moves, world.step_index, int(channels.openers[i])))
            # end if
        # end for
        world.queues.push(nodes, arrivals)
    # end _move_tokens

# end FastGossiping
