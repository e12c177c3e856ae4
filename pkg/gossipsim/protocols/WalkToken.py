# -*- coding: utf-8 -*-
#
# File : gossipsim/protocols/WalkToken.py
# Description : Random walk tokens and per-node walk queues.
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
from collections import deque
import torch
from gossipsim.utils.exceptions import GossipSimError


# A travelling random walk
class WalkToken(object):
    """
    Message bundle carried by a random walk, with the number of real moves made
    """

    # Constructor
    def __init__(self, payload, moves, arrival=0, sender=-1):
        """
        Constructor
        :param payload: (W,) int64 bit row
        :param moves: Moves made so far
        :param arrival: Step of arrival at the current node
        :param sender: Node the token came from
        """
        self.payload = payload
        self.moves = moves
        self.arrival = arrival
        self.sender = sender
    # end __init__

    # Representation
    def __repr__(self):
        return u"WalkToken(moves={}, arrival={}, sender={})".format(self.moves, self.arrival, self.sender)
    # end __repr__

# end WalkToken


# FIFO queues q_v
class WalkQueue(object):
    """
    One FIFO of WalkToken per node. Tokens arriving in the same step are
    enqueued in sender order. Tokens at the moves cap are never enqueued.
    """

    # Constructor
    def __init__(self, n, moves_cap):
        """
        Constructor
        :param n: Number of nodes
        :param moves_cap: Moves after which a token retires
        """
        self.n = n
        self.moves_cap = moves_cap
        self._queues = [deque() for _ in range(n)]
        self.lengths = torch.zeros(n, dtype=torch.int64)
    # end __init__

    ##############################################
    # PROPERTIES
    ##############################################

    # Non-empty queues
    @property
    def nonempty(self):
        """
        Bool mask of nodes with queued tokens
        """
        return self.lengths > 0
    # end nonempty

    # Tokens in queues
    @property
    def resident(self):
        """
        Total number of queued tokens
        """
        return int(self.lengths.sum())
    # end resident

    ##############################################
    # PUBLIC
    ##############################################

    # Enqueue arrivals
    def push(self, nodes, tokens):
        """
        Enqueue tokens, nodes[i] receives tokens[i]
        :param nodes: List of nodes
        :param tokens: List of WalkToken
        """
        for v, token in sorted(zip(nodes, tokens), key=lambda x: (x[1].arrival, x[1].sender)):
            if token.moves >= self.moves_cap:
                raise GossipSimError(u"token with {} moves enqueued, cap is {}".format(token.moves, self.moves_cap))
            # end if
            self._queues[v].append(token)
            self.lengths[v] += 1
        # end for
    # end push

    # Dequeue one token per node
    def pop(self, nodes):
        """
        Front token of each node
        :param nodes: List of nodes with non-empty queues
        :return: List of WalkToken
        """
        tokens = list()
        for v in nodes:
            tokens.append(self._queues[v].popleft())
            self.lengths[v] -= 1
        # end for
        return tokens
    # end pop

    # Tokens at v
    def tokens_of(self, v):
        """
        Queued tokens of v, front first
        """
        return list(self._queues[v])
    # end tokens_of

    # Empty every queue
    def clear(self):
        """
        Discard all tokens
        :return: Number of discarded tokens
        """
        resident = self.resident
        for q in self._queues:
            q.clear()
        # end for
        self.lengths.zero_()
        return resident
    # end clear

    # Length
    def __len__(self):
        return self.resident
    # end __len__

# end WalkQueue
