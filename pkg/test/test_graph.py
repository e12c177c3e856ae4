# -*- coding: utf-8 -*-
#
# File : test/test_graph.py
# Description : Graph models test case.
# Date : 20th of March, 2025
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
import math
import os
import tempfile
import unittest
from unittest import TestCase
import torch
from scipy import stats
from gossipsim.graph import ConfigurationGraph, ErdosRenyiGraph, GraphKind, GraphModel, generate
from gossipsim.utils.exceptions import GraphModelError, NoNeighbor


# Test graph models and neighbor sampling
class Test_Graph(TestCase):
    """
    Test graph models and neighbor sampling
    """

    ##############################
    # TESTS
    ##############################

    # Model validation
    def test_model_validation(self):
        """
        Invalid parameters are rejected
        """
        with self.assertRaises(GraphModelError):
            GraphModel.erdos_renyi(10, 0.0)
        # end with
        with self.assertRaises(GraphModelError):
            GraphModel.erdos_renyi(10, 1.5)
        # end with
        with self.assertRaises(GraphModelError):
            GraphModel.erdos_renyi(0, 0.5)
        # end with
        with self.assertRaises(GraphModelError):
            GraphModel.configuration(5, 3)
        # end with
        with self.assertRaises(ValueError):
            GraphModel.erdos_renyi(100, 0.001)
        # end with
        model = GraphModel.erdos_renyi(100, 0.001, allow_sparse=True)
        self.assertEqual(model.kind, GraphKind.ERDOS_RENYI)
        self.assertEqual(GraphModel.configuration(6, 3).parameter, 3)
    # end test_model_validation

    # Two nodes, p = 1
    def test_k2(self):
        """
        G(2, 1) is a single edge
        """
        graph = GraphModel.erdos_renyi(2, 1.0).generate(0)
        self.assertEqual(graph.edges(), [(0, 1)])
        self.assertEqual(graph.sample_neighbor(0), 1)
        self.assertEqual(graph.sample_neighbor(1), 0)
    # end test_k2

    # Same seed, same graph
    def test_erdos_renyi_determinism(self):
        """
        The topology depends only on (model, seed)
        """
        model = GraphModel.erdos_renyi(200, 0.05)
        a = generate(model, 11)
        b = generate(model, 11)
        c = generate(model, 12)
        self.assertEqual(a.edges(), b.edges())
        self.assertNotEqual(a.edges(), c.edges())
    # end test_erdos_renyi_determinism

    # Simple symmetric graph
    def test_erdos_renyi_structure(self):
        """
        No loops, no multi-edges, symmetric adjacency
        """
        graph = GraphModel.erdos_renyi(300, 0.03).generate(3)
        self.assertTrue(graph.check_symmetry())
        self.assertEqual(graph.irregular_edge_count(), 0)
        self.assertEqual(graph.n_edges(), len(graph.edges()))
        self.assertEqual(int(graph.degrees().sum()), 2 * graph.n_edges())
    # end test_erdos_renyi_structure

    # Number of edges
    def test_erdos_renyi_edge_count(self):
        """
        The number of edges is Bin(n(n-1)/2, p)
        """
        n, p = 400, 0.05
        pairs = n * (n - 1) // 2
        low, high = stats.binom.ppf(1e-6, pairs, p), stats.binom.ppf(1.0 - 1e-6, pairs, p)
        for seed in range(5):
            m = GraphModel.erdos_renyi(n, p).generate(seed).n_edges()
            self.assertGreaterEqual(m, low)
            self.assertLessEqual(m, high)
        # end for
    # end test_erdos_renyi_edge_count

    # Uniform neighbor sampling
    def test_uniform_sampling(self):
        """
        Neighbor draws are uniform (chi-square)
        """
        graph = ErdosRenyiGraph.from_edges(6, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)], seed=5)
        draws = graph.sample_neighbors(torch.zeros(6000, dtype=torch.int64))
        counts = torch.bincount(draws, minlength=6)[1:].tolist()
        self.assertEqual(sum(counts), 6000)
        self.assertGreater(stats.chisquare(counts).pvalue, 1e-4)
    # end test_uniform_sampling

    # Avoid lists
    def test_sampling_avoiding(self):
        """
        Avoided neighbors are never drawn unless every neighbor is avoided
        """
        graph = ErdosRenyiGraph.from_edges(6, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)], seed=1)
        for _ in range(50):
            self.assertEqual(graph.sample_neighbor_avoiding(0, [1, 2, 3, 4]), 5)
        # end for
        nodes = torch.zeros(500, dtype=torch.int64)
        avoid = torch.tensor([[1, 2, -1, -1]] * 500, dtype=torch.int64)
        draws = graph.sample_neighbors_avoiding(nodes, avoid)
        self.assertEqual(set(draws.tolist()), {3, 4, 5})

        # Everything avoided
        small = ErdosRenyiGraph.from_edges(3, [(0, 1), (0, 2)], seed=1)
        draws = small.sample_neighbors_avoiding(torch.zeros(200, dtype=torch.int64), torch.tensor([[1, 2, -1, -1]] * 200))
        self.assertEqual(set(draws.tolist()), {1, 2})
    # end test_sampling_avoiding

    # Isolated node
    def test_isolated_node(self):
        """
        Isolated nodes sample -1, the scalar helper raises
        """
        graph = ErdosRenyiGraph.from_edges(3, [(0, 1)])
        self.assertEqual(graph.sample_neighbors(torch.tensor([2, 0])).tolist(), [-1, 1])
        with self.assertRaises(NoNeighbor):
            graph.sample_neighbor(2)
        # end with
    # end test_isolated_node

    # Concentrated degrees
    def test_erdos_renyi_degrees(self):
        """
        With p = log^2 n / n every degree is within half of pn
        """
        n = 4096
        p = math.log2(n) ** 2 / n
        model = GraphModel.erdos_renyi(n, p)
        concentrated = 0
        for seed in range(20):
            degrees = model.generate(seed).degrees().double()
            concentrated += int(float((degrees - p * n).abs().max()) <= 0.5 * p * n)
        # end for
        self.assertGreaterEqual(concentrated, 19)
    # end test_erdos_renyi_degrees

    # Avoid lists on a large graph
    def test_sampling_avoiding_large(self):
        """
        Draws never hit a four-entry avoid list when the degree exceeds four
        """
        n = 4096
        graph = GraphModel.erdos_renyi(n, math.log2(n) ** 2 / n).generate(5)
        generator = torch.Generator()
        generator.manual_seed(2)
        nodes = torch.randint(n, (100000,), generator=generator)
        nodes = nodes[graph.degrees()[nodes] > 4]
        rows = torch.full((n, 4), -1, dtype=torch.int64)
        for v in range(n):
            first = graph.neighbors(v)[:4]
            rows[v, :len(first)] = torch.tensor(first, dtype=torch.int64)
        # end for
        avoid = rows[nodes]
        draws = graph.sample_neighbors_avoiding(nodes, avoid, generator)
        self.assertGreater(nodes.numel(), 99000)
        self.assertFalse(bool((draws.unsqueeze(1) == avoid).any()))
        self.assertTrue(bool((draws >= 0).all()))
    # end test_sampling_avoiding_large

    # Lazy configuration model
    def test_configuration_lazy_pairing(self):
        """
        Sampling pairs stubs one at a time and keeps the stub counts consistent
        """
        graph = GraphModel.configuration(100, 4).generate(7)
        self.assertIsInstance(graph, ConfigurationGraph)
        self.assertTrue(graph.is_lazy)
        self.assertEqual(graph.n_free_stubs, 400)
        self.assertEqual(graph.n_edges(), 0)
        nodes = torch.arange(100, dtype=torch.int64)
        for _ in range(3):
            targets = graph.sample_neighbors(nodes)
            self.assertTrue(bool((targets >= 0).all()))
            self.assertTrue(graph.check_conservation())
            self.assertTrue(graph.check_symmetry())
            for v, u in zip(nodes.tolist(), targets.tolist()):
                self.assertIn(u, graph.neighbors(v))
            # end for
        # end for
        self.assertGreater(graph.n_edges(), 0)
    # end test_configuration_lazy_pairing

    # Stub choice
    def test_configuration_stub_choice(self):
        """
        Stubs are chosen uniformly and a paired stub always leads to the same node
        """
        graph = GraphModel.configuration(10, 4).generate(1)
        generator = torch.Generator()
        generator.manual_seed(8)
        stubs = graph.sample_stubs(torch.full((10000,), 3, dtype=torch.int64), generator)
        counts = torch.bincount(stubs - 12, minlength=4).tolist()
        self.assertEqual(len(counts), 4)
        self.assertGreater(stats.chisquare(counts).pvalue, 1e-4)
        for c in counts:
            self.assertAlmostEqual(c / 10000.0, 0.25, delta=0.02)
        # end for

        # Reuse of a paired stub
        u = graph.resolve_stub(14)
        self.assertEqual(graph.free_stubs(3), 3 if u != 3 else 2)
        for _ in range(5):
            self.assertEqual(graph.resolve_stub(14), u)
        # end for
        self.assertTrue(graph.check_conservation())
    # end test_configuration_stub_choice

    # Fully paired configuration model
    def test_configuration_pair_all(self):
        """
        After pairing every stub all degrees equal d
        """
        a = GraphModel.configuration(2000, 4).generate(3)
        b = GraphModel.configuration(2000, 4).generate(3)
        a.pair_all()
        b.pair_all()
        self.assertEqual(a.n_free_stubs, 0)
        self.assertTrue(bool((a.degrees() == 4).all()))
        self.assertEqual(a.n_edges(), 4000)
        self.assertTrue(a.check_conservation())
        self.assertEqual(a.edges(), b.edges())

        # Few loops and multi-edges
        self.assertLess(a.irregular_edge_count(), 30)
    # end test_configuration_pair_all

    # Edge list file
    def test_dump_load(self):
        """
        An edge list survives a dump and a load
        """
        graph = GraphModel.erdos_renyi(60, 0.1).generate(9)
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'graph.txt')
            graph.dump(path)
            with open(path, 'r') as f:
                self.assertEqual(f.readline().split(), [str(60), str(graph.n_edges())])
            # end with
            loaded = ErdosRenyiGraph.load(path)
        # end with
        self.assertEqual(loaded.n, 60)
        self.assertEqual(loaded.edges(), graph.edges())
    # end test_dump_load

# end Test_Graph


# Run test
if __name__ == '__main__':
    unittest.main()
# end if
