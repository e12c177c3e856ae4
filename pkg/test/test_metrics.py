# -*- coding: utf-8 -*-
#
# File : test/test_metrics.py
# Description : Run metrics and summaries test case.
# Date : 23rd of March, 2025
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
from gossipsim.graph import GraphModel
from gossipsim.metrics import RunMetrics, exceedance, mark_steps_plus_one, record, robustness_ratio, summarize
from gossipsim.protocols import run_push_pull


# Synthetic metrics
def metrics(steps=3, packets=10, completed=True, lost=None, n=10):
    """
    RunMetrics with given counters
    """
    return RunMetrics('push_pull', n, 0, steps, packets // 2, packets, 2, completed, additional_lost=lost)
# end metrics


# Test metrics
class Test_Metrics(TestCase):
    """
    Test run metrics and cell summaries
    """

    ##############################
    # TESTS
    ##############################

    # Metrics of real runs
    def test_record(self):
        """
        Counters are copied from the outcome, averages are per node
        """
        single = record(run_push_pull(GraphModel.erdos_renyi(1, 1.0).generate(0)))
        self.assertEqual(single.steps, 0)
        self.assertEqual(single.packets_sent, 0)
        self.assertEqual(single.avg_packets_per_node, 0.0)
        self.assertEqual(single.max_packets_per_node, 0)
        self.assertTrue(single.completed)

        pair = run_push_pull(GraphModel.erdos_renyi(2, 1.0).generate(0), seed=1)
        m = pair.metrics
        self.assertEqual(m.steps, 1)
        self.assertEqual(m.packets_sent, 4)
        self.assertEqual(m.avg_packets_per_node, 2.0)
        self.assertEqual(m.max_packets_per_node, 2)
        self.assertEqual(list(m.per_phase.keys()), ['push_pull'])
        self.assertEqual(m.per_phase['push_pull']['packets_sent'], 4)
        self.assertEqual(m.to_dict()['packets_sent'], 4)
    # end test_record

    # Cell statistics
    def test_summarize(self):
        """
        Mean and unbiased standard deviation
        """
        summary = summarize([metrics(packets=10), metrics(packets=20)], ('push_pull', 10, 0))
        self.assertEqual(summary.repetitions, 2)
        self.assertAlmostEqual(summary.get('packets_sent'), 15.0)
        self.assertAlmostEqual(summary.get('packets_sent', 'stddev'), math.sqrt(50.0))
        self.assertEqual(summary.get('packets_sent', 'min'), 10.0)
        self.assertEqual(summary.get('packets_sent', 'max'), 20.0)
        self.assertNotIn('additional_lost', summary.statistics)

        # One run
        one = summarize([metrics(packets=7)], ('push_pull', 10, 0))
        self.assertEqual(one.get('packets_sent', 'stddev'), 0.0)
        for name in ('mean', 'min', 'max'):
            self.assertEqual(one.get('packets_sent', name), 7.0)
        # end for

        with self.assertRaises(ValueError):
            summarize([], ('push_pull', 10, 0))
        # end with
    # end test_summarize

    # Flat rows
    def test_to_row(self):
        """
        Key fields first, then metric statistics
        """
        row = summarize([metrics(), metrics(steps=5)], ('fast', 10, 2)).to_row(('algorithm', 'n', 'F'))
        self.assertEqual(list(row.keys())[:4], ['algorithm', 'n', 'F', 'repetitions'])
        self.assertEqual(row['algorithm'], 'fast')
        self.assertEqual(row['steps_mean'], 4.0)
        self.assertEqual(row['completed_mean'], 1.0)
    # end test_to_row

    # Fastest time plus one
    def test_steps_plus_one(self):
        """
        Budget of the fastest completed run plus one step
        """
        runs = [metrics(steps=5), metrics(steps=6), metrics(steps=9, completed=False)]
        self.assertTrue(mark_steps_plus_one(runs))
        self.assertEqual([m.steps_plus_one_sufficient for m in runs], [True, True, False])
        runs.append(metrics(steps=7))
        self.assertFalse(mark_steps_plus_one(runs))
        self.assertFalse(mark_steps_plus_one([metrics(completed=False)]))
    # end test_steps_plus_one

    # Robustness
    def test_robustness(self):
        """
        Ratio and exceedance percentages
        """
        self.assertEqual(robustness_ratio(5, 0), 0.0)
        self.assertEqual(robustness_ratio(30, 120), 0.25)
        self.assertEqual(exceedance([0, 5, 50, 200], 10), 50.0)
        self.assertEqual(exceedance([0, 5, 50, 200], 0), 75.0)
        self.assertEqual(exceedance([None, 3], 0), 100.0)
        self.assertEqual(exceedance([], 10), 0.0)
    # end test_robustness

# end Test_Metrics


# Run test
if __name__ == '__main__':
    unittest.main()
# end if
