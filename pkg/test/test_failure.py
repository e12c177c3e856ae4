# -*- coding: utf-8 -*-
#
# File : test/test_failure.py
# Description : Failure plans and injection test case.
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
import unittest
from unittest import TestCase
import torch
from gossipsim.engine import World
from gossipsim.failure import FailureInstant, FailurePlan, apply
from gossipsim.graph import GraphModel
from gossipsim.protocols import run_push_pull
from gossipsim.utils.exceptions import ConfigError, GossipSimError


# Seeded generator
def generator(seed):
    """
    torch.Generator with a seed
    """
    g = torch.Generator()
    g.manual_seed(seed)
    return g
# end generator


# Test failure plans
class Test_Failure(TestCase):
    """
    Test failure plans and their injection
    """

    ##############################
    # TESTS
    ##############################

    # Plan validation
    def test_plan_validation(self):
        """
        Bad plans are configuration errors
        """
        with self.assertRaises(ConfigError):
            FailurePlan(-1)
        # end with
        with self.assertRaises(ConfigError):
            FailurePlan(3, instant='at_step')
        # end with
        with self.assertRaises(ValueError):
            FailurePlan(3, instant='whenever')
        # end with
        with self.assertRaises(ConfigError):
            FailurePlan(11).resolve(10, generator(0))
        # end with
        self.assertEqual(FailurePlan(3, instant='at_step', step=4).instant, FailureInstant.AT_STEP)
    # end test_plan_validation

    # Victims
    def test_resolve(self):
        """
        F distinct sorted victims, never the leader
        """
        plan = FailurePlan(30)
        self.assertFalse(plan.is_resolved)
        resolved = plan.resolve(100, generator(4), leader=7)
        self.assertFalse(plan.is_resolved)
        self.assertTrue(resolved.is_resolved)
        victims = resolved.victims.tolist()
        self.assertEqual(len(victims), 30)
        self.assertEqual(len(set(victims)), 30)
        self.assertEqual(victims, sorted(victims))
        self.assertNotIn(7, victims)
        self.assertEqual(resolved.to_dict()['victims'], victims)
        self.assertIsNone(plan.to_dict()['victims'])

        # Same stream, same victims
        again = plan.resolve(100, generator(4), leader=7)
        self.assertTrue(torch.equal(resolved.victims, again.victims))

        # Leader may be drawn when allowed
        everybody = FailurePlan(100, exclude_leader=False).resolve(100, generator(4), leader=7)
        self.assertIn(7, everybody.victims.tolist())
    # end test_resolve

    # Failure steps spread over the run
    def test_uniform_over_run(self):
        """
        Every victim gets a step in [0, horizon)
        """
        plan = FailurePlan(50, instant='uniform_over_run').resolve(200, generator(1), horizon=12)
        self.assertEqual(plan.fail_steps.numel(), 50)
        self.assertTrue(bool((plan.fail_steps >= 0).all()))
        self.assertTrue(bool((plan.fail_steps < 12).all()))
    # end test_uniform_over_run

    # Applying plans
    def test_apply(self):
        """
        F = 0 is a no-op, unresolved plans are rejected
        """
        world = World(GraphModel.erdos_renyi(20, 0.5).generate(1))
        self.assertIsNone(apply(world, FailurePlan(0)))
        self.assertIsNone(apply(world, None))
        with self.assertRaises(GossipSimError):
            apply(world, FailurePlan(3))
        # end with
    # end test_apply

    # Before phase 2
    def test_phase_entry(self):
        """
        Victims fail when the world enters the configured phase
        """
        world = World(GraphModel.erdos_renyi(20, 0.5).generate(1))
        plan = FailurePlan(5).resolve(20, generator(2))
        injector = apply(world, plan, 'phase2')
        world.enter_phase('phase1')
        world.begin_step()
        world.end_step()
        self.assertEqual(int(world.failed.sum()), 0)
        world.enter_phase('phase2')
        self.assertTrue(injector.applied)
        self.assertEqual(world.failed.nonzero().view(-1).tolist(), plan.victims.tolist())
        self.assertEqual(int(world.alive.sum()), 15)
    # end test_phase_entry

    # At a given step
    def test_at_step(self):
        """
        Victims fail at the start of the given step
        """
        world = World(GraphModel.erdos_renyi(20, 0.5).generate(1))
        plan = FailurePlan(4, instant='at_step', step=3).resolve(20, generator(3))
        apply(world, plan)
        for t in range(5):
            world.begin_step()
            self.assertEqual(int(world.failed.sum()), 4 if t >= 3 else 0)
            world.end_step()
        # end for
        self.assertEqual(set(world.failed_at[plan.victims].tolist()), {3})
    # end test_at_step

    # Failures in a protocol run
    def test_run(self):
        """
        Exactly F nodes are reported failed and never send
        """
        n = 256
        graph = GraphModel.erdos_renyi(n, 0.25).generate(2)
        outcome = run_push_pull(graph, seed=3, failure_plan=FailurePlan(40))
        self.assertEqual(len(outcome.victims), 40)
        self.assertEqual(int(outcome.packets_per_node[outcome.victims].sum()), 0)
    # end test_run

# end Test_Failure


# Run test
if __name__ == '__main__':
    unittest.main()
# end if
