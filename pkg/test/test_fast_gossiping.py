# -*- coding: utf-8 -*-
#
# File : test/test_fast_gossiping.py
# Description : Fast-gossiping test case.
# Date : 21st of March, 2025
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
from scipy import stats
from gossipsim.failure import FailurePlan
from gossipsim.graph import GraphModel
from gossipsim.protocols import FastGossiping, ProtocolConstants, WalkQueue, WalkToken, run_fast_gossiping
from gossipsim.utils.exceptions import GossipSimError


# Graph with p = log^2 n / n
def dense_graph(n, seed):
    """
    G(n, log^2 n / n), p capped at 1
    """
    return GraphModel.erdos_renyi(n, min(1.0, math.log2(n) ** 2 / n)).generate(seed)
# end dense_graph


# Test fast-gossiping
class Test_Fast_Gossiping(TestCase):
    """
    Test fast-gossiping with random walks
    """

    ##############################
    # TESTS
    ##############################

    # Single node
    def test_single_node(self):
        """
        n = 1 is complete, no walk is started
        """
        outcome = run_fast_gossiping(GraphModel.erdos_renyi(1, 1.0).generate(0))
        self.assertTrue(outcome.completed)
        self.assertEqual(outcome.steps_used, 0)
        self.assertEqual(outcome.walk_rounds, [])
    # end test_single_node

    # Phases
    def test_phases(self):
        """
        Phase I and Phase II have their fixed lengths, Phase III completes
        """
        n = 1024
        consts = ProtocolConstants(n)
        outcome = run_fast_gossiping(dense_graph(n, 1), consts, seed=1)
        self.assertTrue(outcome.completed)
        self.assertIsNone(outcome.error)
        self.assertEqual(list(outcome.phases.keys()), ['phase1', 'phase2', 'phase3'])
        self.assertEqual(outcome.phases['phase1'].steps, consts.phase1_steps)
        self.assertEqual(outcome.phases['phase1'].packets_sent, n * consts.phase1_steps)
        self.assertEqual(
            outcome.phases['phase2'].steps,
            consts.phase2_rounds * (1 + consts.phase2_walk_steps + consts.phase2_bcast_steps)
        )
        self.assertEqual(outcome.steps_used, sum(p.steps for p in outcome.phases.values()))
        self.assertEqual(outcome.account.packets_sent, sum(p.packets_sent for p in outcome.phases.values()))
    # end test_phases

    # Walk accounting
    def test_walk_rounds(self):
        """
        Every started walk retires, is dropped or is still resident at the round end
        """
        n = 1024
        consts = ProtocolConstants(n)
        outcome = run_fast_gossiping(dense_graph(n, 2), consts, seed=3)
        self.assertEqual(len(outcome.walk_rounds), consts.phase2_rounds)
        low = stats.binom.ppf(1e-6, n, consts.walk_probability)
        high = stats.binom.ppf(1.0 - 1e-6, n, consts.walk_probability)
        for r, round_stats in enumerate(outcome.walk_rounds):
            self.assertEqual(round_stats['round'], r)
            self.assertEqual(round_stats['dropped'], 0)
            self.assertEqual(
                round_stats['started'],
                round_stats['retired'] + round_stats['resident'] + round_stats['dropped']
            )
            self.assertGreaterEqual(round_stats['started'], low)
            self.assertLessEqual(round_stats['started'], high)
            if round_stats['resident'] > 0:
                self.assertGreater(round_stats['active'], 0)
            # end if
        # end for
    # end test_walk_rounds

    # Fixed Phase III
    def test_fixed_phase3(self):
        """
        Without run-to-completion the run lasts exactly its horizon
        """
        n = 512
        consts = ProtocolConstants(n)
        driver = FastGossiping(dense_graph(n, 1), consts, 4, run_to_completion=False)
        outcome = driver.run()
        self.assertEqual(outcome.steps_used, driver.horizon())
        self.assertEqual(outcome.phases['phase3'].steps, consts.phase3_steps)
        self.assertIsNone(outcome.error)
    # end test_fixed_phase3

    # Failures before Phase II
    def test_failures(self):
        """
        Victims fail when Phase II starts; walks sent to them are dropped
        """
        n = 1024
        outcome = run_fast_gossiping(dense_graph(n, 1), seed=5, failure_plan=FailurePlan(100))
        self.assertEqual(len(outcome.victims), 100)
        for round_stats in outcome.walk_rounds:
            self.assertEqual(
                round_stats['started'],
                round_stats['retired'] + round_stats['resident'] + round_stats['dropped']
            )
        # end for
        self.assertTrue(outcome.completed)
    # end test_failures

    # Same seed, same run
    def test_determinism(self):
        """
        A run depends only on the graph and the seed
        """
        graph = dense_graph(512, 3)
        a = run_fast_gossiping(graph, seed=9)
        b = run_fast_gossiping(graph, seed=9)
        self.assertEqual(a.account, b.account)
        self.assertEqual(a.walk_rounds, b.walk_rounds)
        self.assertTrue(torch.equal(a.packets_per_node, b.packets_per_node))
    # end test_determinism

    # Walk queues
    def test_walk_queue(self):
        """
        FIFO per node, same-step arrivals in sender order, moves cap enforced
        """
        queue = WalkQueue(4, moves_cap=3)
        queue.push([2, 2, 1], [WalkToken(None, 1, 5, 3), WalkToken(None, 1, 5, 0), WalkToken(None, 2, 4, 1)])
        self.assertEqual(queue.nonempty.tolist(), [False, True, True, False])
        self.assertEqual(len(queue), 3)
        self.assertEqual([t.sender for t in queue.tokens_of(2)], [0, 3])
        popped = queue.pop([2, 1])
        self.assertEqual([(t.sender, t.moves) for t in popped], [(0, 1), (1, 2)])
        with self.assertRaises(GossipSimError):
            queue.push([0], [WalkToken(None, 3, 6, 2)])
        # end with
        self.assertEqual(queue.clear(), 1)
        self.assertEqual(queue.resident, 0)
    # end test_walk_queue

# end Test_Fast_Gossiping


# Run test
if __name__ == '__main__':
    unittest.main()
# end if
