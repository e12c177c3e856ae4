# -*- coding: utf-8 -*-
#
# File : test/test_memory_gossiping.py
# Description : Memory-model gossiping test case.
# Date : 22nd of March, 2025
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
import unittest
from unittest import TestCase
import torch
from gossipsim.engine import SLOT_CHILD, World
from gossipsim.failure import FailurePlan
from gossipsim.graph import ErdosRenyiGraph, GraphModel
from gossipsim.protocols import (DisseminationTree, LEADER_FAILED, ProtocolConstants, run_memory_gossiping,
                                 run_memory_gossiping_twice)
from gossipsim.utils.random_streams import RandomStreams


# Graph with p = log^2 n / n
def dense_graph(n, seed):
    """
    G(n, log^2 n / n), p capped at 1
    """
    return GraphModel.erdos_renyi(n, min(1.0, math.log2(n) ** 2 / n)).generate(seed)
# end dense_graph


# Test memory-model gossiping
class Test_Memory_Gossiping(TestCase):
    """
    Test memory-model gossiping
    """

    ##############################
    # TESTS
    ##############################

    # Single node
    def test_single_node(self):
        """
        n = 1 gathers its own message
        """
        outcome = run_memory_gossiping(GraphModel.erdos_renyi(1, 1.0).generate(0), leader=0)
        self.assertTrue(outcome.completed)
        self.assertEqual(outcome.leader, 0)
        self.assertEqual(outcome.gathered_at_leader.origins(), [0])
    # end test_single_node

    # Five-node star
    def test_star(self):
        """
        The center informs the four leaves in its first long-step and gathers all five origins
        """
        star = ErdosRenyiGraph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)], seed=2)
        world = World(star)
        tree = DisseminationTree(world, 0, ProtocolConstants(5), RandomStreams(6))
        tree.build()
        self.assertEqual(sorted(tree.first_step[1:].tolist()), [0, 1, 2, 3])
        self.assertEqual(world.memory_kinds[0].tolist(), [SLOT_CHILD] * 4)
        self.assertEqual(sorted(world.memory[0].tolist()), [1, 2, 3, 4])
        self.assertEqual(world.provenance[1:, 0].tolist(), [0, 0, 0, 0])

        gathered = tree.gather()
        self.assertEqual(gathered.origins(), [0, 1, 2, 3, 4])
        self.assertEqual(int(tree.confirmed[0].sum()), 4)

        tree.rebroadcast(run_to_completion=True, step_cap=10)
        self.assertTrue(world.is_complete())
        self.assertTrue(bool(tree.broadcast.all()))
        self.assertEqual(list(world.phase_breakdown().keys()), ['phase1', 'phase2', 'phase3'])
    # end test_star

    # Full runs
    def test_runs(self):
        """
        Without failures every run completes and loses nothing
        """
        n = 1024
        graph = dense_graph(n, 1)
        for seed in range(3):
            outcome = run_memory_gossiping(graph, seed=seed)
            self.assertIsNotNone(outcome.leader)
            self.assertEqual(list(outcome.phases.keys()), ['phase1', 'phase2', 'phase3'])
            self.assertEqual(outcome.extra['tree']['gathered'], len(outcome.gathered_at_leader))
            self.assertEqual(n - len(outcome.gathered_at_leader), outcome.additional_lost)
            self.assertTrue(outcome.completed)
            self.assertEqual(outcome.additional_lost, 0)
            self.assertIsNone(outcome.error)
        # end for
    # end test_runs

    # Linear number of channels
    def test_channel_bound(self):
        """
        With a given leader and no failures a run opens at most 9n + log^2 n channels
        """
        n = 2048
        graph = dense_graph(n, 7)
        for seed in range(3):
            outcome = run_memory_gossiping(graph, seed=seed, leader=seed)
            self.assertTrue(outcome.completed)
            self.assertLessEqual(outcome.account.channels_opened, 9 * n + math.log2(n) ** 2)
            self.assertLessEqual(outcome.phases['phase1'].channels_opened, 5 * n)
        # end for
    # end test_channel_bound

    # Given leader
    def test_given_leader(self):
        """
        A given leader is used as is
        """
        outcome = run_memory_gossiping(dense_graph(256, 1), seed=1, leader=17)
        self.assertEqual(outcome.leader, 17)
        self.assertIn(17, outcome.gathered_at_leader)
    # end test_given_leader

    # Elected leader
    def test_leader_election(self):
        """
        The election's packets and steps are added to the run
        """
        n = 512
        outcome = run_memory_gossiping(dense_graph(n, 2), seed=3, leader_election=True)
        self.assertIn('leader_election', outcome.extra)
        self.assertTrue(any(k.startswith('leader_election.') for k in outcome.phases))
        self.assertEqual(outcome.account.packets_sent, sum(p.packets_sent for p in outcome.phases.values()))
        self.assertEqual(outcome.steps_used, sum(p.steps for p in outcome.phases.values()))
    # end test_leader_election

    # Several trees under failures
    def test_trees_with_failures(self):
        """
        The union of several trees loses fewer healthy origins than a single tree
        """
        n = 1024
        graph = dense_graph(n, 4)
        plan = FailurePlan(64)
        twice = run_memory_gossiping_twice(graph, seed=5, leader=3, failure_plan=plan, tree_count=3)
        once = run_memory_gossiping_twice(graph, seed=5, leader=3, failure_plan=plan, tree_count=1)
        self.assertEqual(len(twice.victims), 64)
        self.assertNotIn(3, twice.victims)
        self.assertEqual(twice.victims, once.victims)
        self.assertEqual(len(twice.extra['gathered_per_tree']), 3)
        self.assertGreaterEqual(len(twice.gathered_at_leader), max(twice.extra['gathered_per_tree']))
        self.assertLessEqual(twice.additional_lost, once.additional_lost)
        self.assertLessEqual(twice.additional_lost, n - 64)
    # end test_trees_with_failures

    # No failures, no loss
    def test_trees_without_failures(self):
        """
        F = 0 loses nothing, two executions by default
        """
        outcome = run_memory_gossiping_twice(dense_graph(512, 5), seed=2)
        self.assertTrue(outcome.completed)
        self.assertEqual(outcome.additional_lost, 0)
        self.assertEqual(len(outcome.extra['trees']), 2)
        self.assertEqual(len(outcome.extra['gathered_per_tree']), 2)
    # end test_trees_without_failures

    # Failed leader
    def test_leader_failed(self):
        """
        A failed leader is reported
        """
        n = 64
        outcome = run_memory_gossiping(dense_graph(n, 1), seed=1, failure_plan=FailurePlan(n))
        self.assertFalse(outcome.completed)
        self.assertEqual(outcome.error, LEADER_FAILED)
    # end test_leader_failed

    # Same seed, same run
    def test_determinism(self):
        """
        A run depends only on the graph and the seed
        """
        graph = dense_graph(512, 6)
        a = run_memory_gossiping_twice(graph, seed=4, failure_plan=FailurePlan(10))
        b = run_memory_gossiping_twice(graph, seed=4, failure_plan=FailurePlan(10))
        self.assertEqual(a.leader, b.leader)
        self.assertEqual(a.victims, b.victims)
        self.assertEqual(a.account, b.account)
        self.assertEqual(a.additional_lost, b.additional_lost)
        self.assertTrue(torch.equal(a.packets_per_node, b.packets_per_node))
    # end test_determinism

# end Test_Memory_Gossiping


# Run test
if __name__ == '__main__':
    unittest.main()
# end if
