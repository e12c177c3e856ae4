# -*- coding: utf-8 -*-
#
# File : gossipsim/graph/Graph.py
# Description : Base class of communication graphs.
# Date : 3rd of March, 2025
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
from collections import Counter
import torch
from gossipsim.utils.exceptions import NoNeighbor
from gossipsim.utils.random_streams import RandomStreams

logger = logging.getLogger(__name__)

# Rejection rounds before the exact avoid-list fallback
MAX_REJECTION_TRIES = 32


# Communication graph
class Graph(object):
    """
    Communication graph. Subclasses provide uniform neighbor sampling
    (sample_neighbors); this class adds avoid-list sampling, scalar helpers,
    invariant checks and the edge-list text format.
    """

    # Constructor
    def __init__(self, model, seed):
        """
        Constructor
        :param model: GraphModel
        :param seed: Topology seed
        """
        self.model = model
        self.n = model.n
        self.seed = int(seed)
        self.streams = RandomStreams(self.seed)
        self.rng_stream = self.streams.generator('topology')
    # end __init__

    ##############################################
    # PROPERTIES
    ##############################################

    # Mutable under sampling?
    @property
    def is_lazy(self):
        """
        True when sampling reveals new edges (configuration model)
        """
        return False
    # end is_lazy

    ##############################################
    # PUBLIC
    ##############################################

    # Neighbors of a node (with multiplicity)
    def neighbors(self, v):
        """
        Current neighbor list of v
        :param v: Node
        :return: List of nodes
        """
        raise NotImplementedError
    # end neighbors

    # Degrees of all nodes
    def degrees(self):
        """
        Current degree of every node
        :return: (n,) long tensor
        """
        raise NotImplementedError
    # end degrees

    # Degree of a node
    def degree(self, v):
        """
        Degree of v
        """
        return len(self.neighbors(v))
    # end degree

    # Uniform neighbor of each node
    def sample_neighbors(self, nodes, generator=None):
        """
        One uniform neighbor per entry of nodes (-1 for isolated nodes)
        :param nodes: (k,) long tensor
        :param generator: Stream of the calling phase (default: topology stream)
        :return: (k,) long tensor
        """
        raise NotImplementedError
    # end sample_neighbors

    # Uniform neighbor outside an avoid list
    def sample_neighbors_avoiding(self, nodes, avoid, generator=None):
        """
        One neighbor per node, uniform over N(v) minus the avoid row of v.
        When every neighbor is avoided the draw falls back to all of N(v).
        :param nodes: (k,) long tensor
        :param avoid: (k, a) long tensor, -1 marks empty entries
        :param generator: Stream of the calling phase
        :return: (k,) long tensor, -1 for isolated nodes
        """
        nodes = torch.as_tensor(nodes, dtype=torch.int64)
        choice = self.sample_neighbors(nodes, generator)
        if avoid.numel() == 0:
            return choice
        # end if
        blocked = ((choice.unsqueeze(1) == avoid).any(dim=1)) & (choice >= 0)

        # Rejection keeps the conditional distribution uniform
        tries = 0
        while bool(blocked.any()) and tries < MAX_REJECTION_TRIES:
            idx = blocked.nonzero().view(-1)
            choice[idx] = self.sample_neighbors(nodes[idx], generator)
            blocked[idx] = (choice[idx].unsqueeze(1) == avoid[idx]).any(dim=1)
            tries += 1
        # end while

        # Small neighborhoods, exact draw
        for i in blocked.nonzero().view(-1).tolist():
            choice[i] = self._exact_avoiding(int(nodes[i]), [a for a in avoid[i].tolist() if a >= 0], generator)
        # end for

        return choice
    # end sample_neighbors_avoiding

    # Scalar uniform neighbor
    def sample_neighbor(self, v, generator=None):
        """
        Uniform neighbor of v
        :param v: Node
        :return: Node
        """
        u = int(self.sample_neighbors(torch.tensor([int(v)], dtype=torch.int64), generator)[0])
        if u < 0:
            raise NoNeighbor(v)
        # end if
        return u
    # end sample_neighbor

    # Scalar avoid sampling
    def sample_neighbor_avoiding(self, v, avoid, generator=None):
        """
        Uniform neighbor of v outside avoid (fallback: all of N(v))
        :param v: Node
        :param avoid: List of at most 4 nodes
        :return: Node
        """
        avoid = list(avoid) + [-1] * (4 - len(avoid))
        u = int(self.sample_neighbors_avoiding(
            torch.tensor([int(v)], dtype=torch.int64),
            torch.tensor([avoid], dtype=torch.int64),
            generator
        )[0])
        if u < 0:
            raise NoNeighbor(v)
        # end if
        return u
    # end sample_neighbor_avoiding

    # Sorted edge list
    def edges(self):
        """
        Sorted list of edges (u, v), u <= v, repeated for multi-edges
        :return: List of tuples
        """
        result = list()
        for u in range(self.n):
            for v in self.neighbors(u):
                if u < v:
                    result.append((u, v))
                # end if
            # end for
            # A loop appears twice in its node's list
            loops = self.neighbors(u).count(u)
            result.extend([(u, u)] * (loops // 2))
        # end for
        return sorted(result)
    # end edges

    # Number of edges
    def n_edges(self):
        """
        Number of edges (multi-edges and loops included)
        """
        return int(self.degrees().sum().item()) // 2
    # end n_edges

    # Multi-edges and loops
    def irregular_edge_count(self):
        """
        Number of loops plus surplus parallel edges
        :return: Integer
        """
        counts = Counter(self.edges())
        return sum(c for (u, v), c in counts.items() if u == v) + sum(c - 1 for (u, v), c in counts.items() if u != v)
    # end irregular_edge_count

    # Check symmetry
    def check_symmetry(self):
        """
        u in N(v) <=> v in N(u), with multiplicity
        :return: True if symmetric
        """
        for v in range(self.n):
            counts = Counter(self.neighbors(v))
            for u, c in counts.items():
                if u != v and Counter(self.neighbors(u))[v] != c:
                    return False
                # end if
            # end for
        # end for
        return True
    # end check_symmetry

    # Write edge list
    def dump(self, path):
        """
        Write the edge list: header "n m", then sorted "u v" lines
        :param path: Output file
        """
        edges = self.edges()
        with open(path, 'w') as f:
            f.write(u"{} {}\n".format(self.n, len(edges)))
            for u, v in edges:
                f.write(u"{} {}\n".format(u, v))
            # end for
        # end with
    # end dump

    ##############################################
    # PRIVATE
    ##############################################

    # Make every stub of v a concrete edge
    def _reveal(self, v):
        """
        Hook for lazily built graphs
        """
        pass
    # end _reveal

    # Exact uniform draw from N(v) minus avoid
    def _exact_avoiding(self, v, avoid, generator=None):
        """
        Exact draw when rejection keeps failing (N(v) almost inside avoid)
        :param v: Node
        :param avoid: List of nodes
        :return: Node
        """
        self._reveal(v)
        neighbors = self.neighbors(v)
        if len(neighbors) == 0:
            return -1
        # end if
        allowed = [u for u in neighbors if u not in avoid]
        if len(allowed) == 0:
            allowed = neighbors
        # end if
        index = int(torch.randint(len(allowed), (1,), generator=generator if generator is not None else self.rng_stream)[0])
        return allowed[index]
    # end _exact_avoiding

    ##############################################
    # OVERRIDE
    ##############################################

    # Number of nodes
    def __len__(self):
        """
        Number of nodes
        """
        return self.n
    # end __len__

    ##############################################
    # STATIC
    ##############################################

    # Read edge list
    @staticmethod
    def load(path):
        """
        Read an edge list written by dump
        :param path: Input file
        :return: A fixed ErdosRenyiGraph over the stored edges
        """
        from .ErdosRenyiGraph import ErdosRenyiGraph
        with open(path, 'r') as f:
            n, m = [int(x) for x in f.readline().split()]
            edges = [tuple(int(x) for x in line.split()) for line in f if line.strip()]
        # end with
        if len(edges) != m:
            raise ValueError(u"{}: header announces {} edges, found {}".format(path, m, len(edges)))
        # end if
        return ErdosRenyiGraph.from_edges(n, edges)
    # end load

# end Graph
