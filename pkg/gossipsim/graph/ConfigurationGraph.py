# -*- coding: utf-8 -*-
#
# File : gossipsim/graph/ConfigurationGraph.py
# Description : Configuration model with stubs paired on first use.
# Date : 4th of March, 2025
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
from .Graph import Graph

logger = logging.getLogger(__name__)


# Configuration model graph
class ConfigurationGraph(Graph):
    """
    Configuration model over d*n stubs, d per node (stub s belongs to node s // d).
    All stubs start unpaired. Choosing an unpaired stub pairs it with a stub drawn
    uniformly from the remaining free stubs of the whole graph (deferred
    decisions), which can create loops and multi-edges. An instance mutates
    while it is sampled and belongs to a single run.
    """

    # Constructor
    def __init__(self, model, seed):
        """
        Constructor
        :param model: GraphModel (configuration)
        :param seed: Topology seed
        """
        super(ConfigurationGraph, self).__init__(model, seed)
        self.d = model.d
        n_stubs = self.d * self.n

        # Stub partner, -1 while free
        self._partner = [-1] * n_stubs

        # Free stubs, swap-remove list
        self._free = list(range(n_stubs))
        self._free_pos = list(range(n_stubs))

        # Paired stubs per node
        self._degree = [0] * self.n
    # end __init__

    ##############################################
    # PROPERTIES
    ##############################################

    # Lazy
    @property
    def is_lazy(self):
        """
        Sampling reveals edges
        """
        return True
    # end is_lazy

    # Number of free stubs
    @property
    def n_free_stubs(self):
        """
        Free stubs in the whole graph
        """
        return len(self._free)
    # end n_free_stubs

    ##############################################
    # PUBLIC
    ##############################################

    # Owner of a stub
    def owner(self, stub):
        """
        Node a stub belongs to
        """
        return stub // self.d
    # end owner

    # Free stubs of v
    def free_stubs(self, v):
        """
        Number of unpaired stubs of v
        """
        return self.d - self._degree[v]
    # end free_stubs

    # Neighbors of v
    def neighbors(self, v):
        """
        Endpoints of the paired stubs of v, in stub order (loops appear twice)
        """
        base = v * self.d
        return [self._partner[s] // self.d for s in range(base, base + self.d) if self._partner[s] >= 0]
    # end neighbors

    # Degrees
    def degrees(self):
        """
        Paired stubs of every node
        """
        return torch.tensor(self._degree, dtype=torch.int64)
    # end degrees

    # Degree of v
    def degree(self, v):
        """
        Paired stubs of v
        """
        return self._degree[v]
    # end degree

    # Uniform stubs
    def sample_stubs(self, nodes, generator=None):
        """
        One uniform stub (out of d) per node
        :param nodes: (k,) long tensor
        :param generator: Stream of the calling phase
        :return: (k,) long tensor of stub ids
        """
        nodes = torch.as_tensor(nodes, dtype=torch.int64)
        generator = generator if generator is not None else self.rng_stream
        local = torch.randint(self.d, (nodes.numel(),), generator=generator)
        return nodes * self.d + local
    # end sample_stubs

    # Follow (or create) the edge of a stub
    def resolve_stub(self, stub):
        """
        Node at the other end of stub, pairing the stub first if it is free
        :param stub: Stub id
        :return: Node
        """
        return self.resolve_stubs(torch.tensor([int(stub)], dtype=torch.int64))[0].item()
    # end resolve_stub

    # Follow (or create) the edges of stubs, in order
    def resolve_stubs(self, stubs):
        """
        Endpoints of stubs; free stubs are paired in the given order, each with a
        uniform free stub of the graph (other than itself)
        :param stubs: (k,) long tensor
        :return: (k,) long tensor of nodes
        """
        stubs = stubs.tolist()
        uniforms = torch.rand(len(stubs), generator=self.rng_stream, dtype=torch.float64).tolist()
        result = list()
        for s, u in zip(stubs, uniforms):
            if self._partner[s] < 0:
                self._pair(s, u)
            # end if
            result.append(self._partner[s] // self.d)
        # end for
        return torch.tensor(result, dtype=torch.int64)
    # end resolve_stubs

    # Uniform neighbors
    def sample_neighbors(self, nodes, generator=None):
        """
        Uniform stub of each node, followed to its endpoint
        :param nodes: (k,) long tensor
        :param generator: Stream of the calling phase
        :return: (k,) long tensor
        """
        nodes = torch.as_tensor(nodes, dtype=torch.int64)
        if nodes.numel() == 0:
            return nodes.clone()
        # end if
        return self.resolve_stubs(self.sample_stubs(nodes, generator))
    # end sample_neighbors

    # Pair every stub
    def pair_all(self):
        """
        Pair every remaining stub (in stub order)
        """
        uniforms = iter(torch.rand(len(self._free) // 2, generator=self.rng_stream, dtype=torch.float64).tolist())
        for s in range(self.d * self.n):
            if self._partner[s] < 0:
                self._pair(s, next(uniforms))
            # end if
        # end for
    # end pair_all

    # Check conservation
    def check_conservation(self):
        """
        degree(v) + free_stubs(v) = d, free total even and equal to d*n - 2*edges
        :return: True if all hold
        """
        n_paired = sum(1 for p in self._partner if p >= 0)
        n_free = len(self._free)
        if n_free % 2 != 0 or n_free != self.d * self.n - n_paired:
            return False
        # end if
        for v in range(self.n):
            if self._degree[v] + self.free_stubs(v) != self.d or self._degree[v] > self.d:
                return False
            # end if
        # end for
        return all(self._partner[p] == s for s, p in enumerate(self._partner) if p >= 0)
    # end check_conservation

    ##############################################
    # PRIVATE
    ##############################################

    # Reveal all stubs of v
    def _reveal(self, v):
        """
        Pair the free stubs of v
        """
        base = v * self.d
        free = [s for s in range(base, base + self.d) if self._partner[s] < 0]
        if len(free) > 0:
            self.resolve_stubs(torch.tensor(free, dtype=torch.int64))
        # end if
    # end _reveal

    # Remove a stub from the free list
    def _take(self, s):
        """
        Swap-remove s from the free list
        """
        pos = self._free_pos[s]
        last = self._free[-1]
        self._free[pos] = last
        self._free_pos[last] = pos
        self._free.pop()
        self._free_pos[s] = -1
    # end _take

    # Pair a free stub
    def _pair(self, s, u):
        """
        Pair s with a uniform remaining free stub
        :param s: Free stub
        :param u: Uniform number in [0, 1)
        """
        self._take(s)
        other = self._free[min(int(u * len(self._free)), len(self._free) - 1)]
        self._take(other)
        self._partner[s] = other
        self._partner[other] = s
        self._degree[s // self.d] += 1
        self._degree[other // self.d] += 1
    # end _pair

# end ConfigurationGraph
