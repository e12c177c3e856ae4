# -*- coding: utf-8 -*-
#
# File : gossipsim/graph/ErdosRenyiGraph.py
# Description : Fully materialized G(n, p) random graph.
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
import torch
from gossipsim.utils.random_streams import derive_seed
from .Graph import Graph
from .GraphModel import GraphModel

logger = logging.getLogger(__name__)

# Below this many node pairs the edge set is drawn with a permutation
PERMUTATION_LIMIT = 1 << 24


# Erdos-Renyi random graph
class ErdosRenyiGraph(Graph):
    """
    G(n, p): every unordered pair is an edge with probability p, independently.
    The adjacency is stored in CSR form (indptr, indices) and never changes
    after generation, so one instance can be shared read-only by many runs.
    """

    # Constructor
    def __init__(self, model, seed, src, dst):
        """
        Constructor, use generate() or from_edges()
        :param model: GraphModel
        :param seed: Topology seed
        :param src: Edge sources (one direction)
        :param dst: Edge targets
        """
        super(ErdosRenyiGraph, self).__init__(model, seed)

        # Both directions, sorted by source then target
        both_src = torch.cat((src, dst))
        both_dst = torch.cat((dst, src))
        order = torch.argsort(both_src * self.n + both_dst)
        self.indices = both_dst[order].contiguous()
        counts = torch.bincount(both_src, minlength=self.n)
        self.indptr = torch.cat((torch.zeros(1, dtype=torch.int64), torch.cumsum(counts, dim=0)))
        self._degrees = counts
    # end __init__

    ##############################################
    # PUBLIC
    ##############################################

    # Neighbors of v
    def neighbors(self, v):
        """
        Sorted neighbor list of v
        """
        return self.indices[self.indptr[v]:self.indptr[v + 1]].tolist()
    # end neighbors

    # Degrees
    def degrees(self):
        """
        Degree of every node
        """
        return self._degrees.clone()
    # end degrees

    # Degree of v
    def degree(self, v):
        """
        Degree of v
        """
        return int(self._degrees[v])
    # end degree

    # Uniform neighbors
    def sample_neighbors(self, nodes, generator=None):
        """
        Uniform neighbor per node, -1 for isolated nodes
        :param nodes: (k,) long tensor
        :param generator: Stream of the calling phase (default: topology stream)
        :return: (k,) long tensor
        """
        nodes = torch.as_tensor(nodes, dtype=torch.int64)
        generator = generator if generator is not None else self.rng_stream
        deg = self._degrees[nodes]
        u = torch.rand(nodes.numel(), generator=generator, dtype=torch.float64)
        if self.indices.numel() == 0:
            return torch.full_like(nodes, -1)
        # end if
        offset = torch.minimum((u * deg).to(torch.int64), torch.clamp(deg - 1, min=0))
        position = torch.clamp(self.indptr[nodes] + offset, max=self.indices.numel() - 1)
        return torch.where(deg > 0, self.indices[position], torch.full_like(nodes, -1))
    # end sample_neighbors

    ##############################################
    # STATIC
    ##############################################

    # Generate G(n, p)
    @staticmethod
    def generate(model, seed):
        """
        Draw the number of edges M ~ Bin(n(n-1)/2, p), then a uniform set of M
        distinct node pairs; together this is exactly G(n, p).
        :param model: GraphModel (Erdos-Renyi)
        :param seed: Topology seed
        :return: ErdosRenyiGraph
        """
        n, p = model.n, model.p
        g = torch.Generator()
        g.manual_seed(derive_seed(seed, 'edges'))
        n_pairs = n * (n - 1) // 2

        # Number of edges
        if n_pairs == 0:
            m = 0
        elif p >= 1.0:
            m = n_pairs
        else:
            m = int(torch.binomial(
                torch.tensor([float(n_pairs)], dtype=torch.float64),
                torch.tensor([p], dtype=torch.float64),
                generator=g
            )[0].item())
        # end if

        # Pair indices
        if m == n_pairs:
            pairs = torch.arange(n_pairs, dtype=torch.int64)
        elif n_pairs <= PERMUTATION_LIMIT:
            pairs = torch.randperm(n_pairs, generator=g)[:m]
        else:
            pairs = torch.empty(0, dtype=torch.int64)
            while pairs.numel() < m:
                extra = int((m - pairs.numel()) * 1.05) + 16
                pairs = torch.unique(torch.cat((pairs, torch.randint(n_pairs, (extra,), generator=g))))
            # end while
            pairs = pairs[torch.randperm(pairs.numel(), generator=g)[:m]]
        # end if
        pairs = torch.sort(pairs)[0]

        src, dst = _pair_to_nodes(pairs)
        logger.debug(u"G(n={}, p={:.6f}): {} edges, mean degree {:.2f}".format(n, p, m, 2.0 * m / n))
        return ErdosRenyiGraph(model, seed, src, dst)
    # end generate

    # Graph over a fixed edge list
    @staticmethod
    def from_edges(n, edges, model=None, seed=0):
        """
        Materialized graph over given edges
        :param n: Number of nodes
        :param edges: Iterable of (u, v)
        :param model: GraphModel, default G(n, 1) placeholder
        :param seed: Sampling seed
        :return: ErdosRenyiGraph
        """
        if model is None:
            model = GraphModel.erdos_renyi(n, 1.0)
        # end if
        edges = torch.tensor(list(edges), dtype=torch.int64).view(-1, 2)
        return ErdosRenyiGraph(model, seed, edges[:, 0].contiguous(), edges[:, 1].contiguous())
    # end from_edges

# end ErdosRenyiGraph


# Linear pair index to (j, i), j < i
def _pair_to_nodes(k):
    """
    Map k = i(i-1)/2 + j (0 <= j < i) back to (j, i)
    :param k: Long tensor of pair indices
    :return: (j, i) long tensors
    """
    i = torch.floor((1.0 + torch.sqrt(1.0 + 8.0 * k.to(torch.float64))) / 2.0).to(torch.int64)
    # Float rounding
    i = torch.where(i * (i - 1) // 2 > k, i - 1, i)
    i = torch.where((i + 1) * i // 2 <= k, i + 1, i)
    j = k - i * (i - 1) // 2
    return j, i
# end _pair_to_nodes
