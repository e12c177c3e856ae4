# -*- coding: utf-8 -*-
#
# File : test/test_cli.py
# Description : Experiment harness test case.
# Date : 24th of March, 2025
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
import contextlib
import io
import os
import shutil
import tempfile
import unittest
from unittest import TestCase
import pandas as pd
from gossipsim.cli import COLUMNS, ExperimentConfig, ExperimentDataset, cell_seed, main, run_experiment
from gossipsim.utils.exceptions import ConfigError, ResourceGuardError

# Smallest useful sweep
TINY = u"""[experiment]
algorithm = "push_pull"
n_sweep = [2]
repetitions = 1

[graph]
p = 1.0
"""

# A few algorithms with failures
SMALL = u"""[experiment]
algorithm = ["push_pull", "memory_twice"]
n_sweep = [{sizes}]
F_sweep = [0, 4]
repetitions = 2
master_seed = 7
"""


# Test the experiment harness
class Test_CLI(TestCase):
    """
    Test configurations, sweeps and result files
    """

    ##############################
    # SETUP
    ##############################

    # Temporary directory
    def setUp(self):
        self.directory = tempfile.mkdtemp()
    # end setUp

    # Remove it
    def tearDown(self):
        shutil.rmtree(self.directory)
    # end tearDown

    ##############################
    # PRIVATE
    ##############################

    # Write a config file
    def _config(self, text, name='config.toml'):
        path = os.path.join(self.directory, name)
        with open(path, 'w') as f:
            f.write(text)
        # end with
        return path
    # end _config

    # Read a result file
    def _read(self, *parts):
        with open(os.path.join(self.directory, *parts), 'rb') as f:
            return f.read()
        # end with
    # end _read

    ##############################
    # TESTS
    ##############################

    # Defaults and formulas
    def test_describe(self):
        """
        The resolved configuration shows defaults and constant formulas
        """
        config = ExperimentConfig.load(self._config(SMALL.format(sizes=u"64, 128")))
        self.assertEqual(config.algorithms, ['push_pull', 'memory_twice'])
        self.assertEqual(config.tables['graph']['p'], 'log(n)^2/n')
        self.assertEqual(config.modes['tree_count'], 3)
        text = config.describe()
        self.assertIn(u'walk_probability = "1.0/log(n)"', text)
        self.assertIn(u'F_sweep = [0, 4]', text)
        self.assertIn(u'# constants at n = 128', text)
        self.assertEqual(len(config.constants_hash(64)), 12)
        self.assertNotEqual(config.constants_hash(64), config.constants_hash(128))
    # end test_describe

    # Configuration errors
    def test_config_errors(self):
        """
        Errors carry the offending line
        """
        cases = [
            (TINY.replace(u"repetitions = 1", u"repetitions = 0"), 4),
            (TINY + u"\n[constants]\nmemory_phase1_push_steps = 10\n", 10),
            (TINY.replace(u"repetitions = 1", u"repetitionz = 1"), 4),
            (TINY + u"\n[plots]\nwidth = 3\n", 9),
            (TINY.replace(u"n_sweep = [2]", u"n_sweep = [2]\nF_sweep = [3]"), 4),
            (TINY.replace(u'"push_pull"', u'"gossip"'), 2)
        ]
        for text, line in cases:
            with self.assertRaises(ConfigError) as context:
                ExperimentConfig.load(self._config(text))
            # end with
            self.assertEqual(context.exception.line, line)
        # end for

        # Broken TOML
        with self.assertRaises(ConfigError):
            ExperimentConfig.load(self._config(u"[experiment\n"))
        # end with
    # end test_config_errors

    # Too large for full message sets
    def test_resource_guard(self):
        """
        n above the bit-set limit needs a tracked subset
        """
        text = u'[experiment]\nalgorithm = "memory"\nn_sweep = [100000]\n'
        with self.assertRaises(ResourceGuardError) as context:
            ExperimentConfig.load(self._config(text))
        # end with
        self.assertEqual(context.exception.key, 'n_sweep')
        config = ExperimentConfig.load(self._config(text + u"\n[modes]\ntracked_subset_size = 1000\n"))
        self.assertEqual(config.n_sweep, [100000])
    # end test_resource_guard

    # Cell order and seeds
    def test_cells(self):
        """
        Cells are ordered by algorithm, n, F, repetition; seeds do not depend on that order
        """
        config = ExperimentConfig.load(self._config(SMALL.format(sizes=u"32, 64")))
        dataset = ExperimentDataset(config)
        self.assertEqual(len(dataset), 2 * 2 * 2 * 2)
        first = dataset.cells[:3]
        self.assertEqual([(c.algorithm, c.n, c.F, c.repetition) for c in first],
                         [('push_pull', 32, 0, 0), ('push_pull', 32, 0, 1), ('push_pull', 32, 4, 0)])
        self.assertEqual(cell_seed(7, 'push_pull', 64, 4, 1), cell_seed(7, 'push_pull', 64, 4, 1))
        self.assertNotEqual(cell_seed(7, 'push_pull', 64, 4, 1), cell_seed(7, 'push_pull', 64, 4, 0))
    # end test_cells

    # Two nodes
    def test_tiny_run(self):
        """
        K2 push-pull: one row, four packets
        """
        config = ExperimentConfig.load(self._config(TINY))
        results = run_experiment(config, os.path.join(self.directory, 'out'), progress=False)
        self.assertEqual(len(results), 1)
        self.assertTrue(results[0].ok)
        runs = pd.read_csv(os.path.join(self.directory, 'out', 'runs.csv'))
        self.assertEqual(list(runs.columns), list(COLUMNS))
        self.assertEqual(len(runs), 1)
        self.assertEqual(int(runs['steps'][0]), 1)
        self.assertEqual(int(runs['packets_sent'][0]), 4)
        self.assertTrue(bool(runs['completed'][0]))
        self.assertTrue(pd.isna(runs['wallclock_ms'][0]))
        summary = pd.read_csv(os.path.join(self.directory, 'out', 'summary.csv'))
        self.assertEqual(float(summary['packets_sent_mean'][0]), 4.0)
        self.assertEqual(float(summary['packets_sent_stddev'][0]), 0.0)
    # end test_tiny_run

    # Reproducibility
    def test_byte_identical(self):
        """
        Same configuration, same bytes; a cell's result does not depend on the sweep
        """
        config = ExperimentConfig.load(self._config(SMALL.format(sizes=u"32, 64")))
        run_experiment(config, os.path.join(self.directory, 'a'), progress=False)
        run_experiment(config, os.path.join(self.directory, 'b'), progress=False)
        for name in ('runs.csv', 'summary.csv', 'details.jsonl', 'config.toml'):
            self.assertEqual(self._read('a', name), self._read('b', name))
        # end for

        # Reversed sizes
        other = ExperimentConfig.load(self._config(SMALL.format(sizes=u"64, 32"), 'reversed.toml'))
        run_experiment(other, os.path.join(self.directory, 'c'), progress=False)
        a = pd.read_csv(os.path.join(self.directory, 'a', 'runs.csv'))
        c = pd.read_csv(os.path.join(self.directory, 'c', 'runs.csv'))
        key = ['algorithm', 'n', 'F', 'repetition']
        a = a.sort_values(key).reset_index(drop=True)
        c = c.sort_values(key).reset_index(drop=True)
        pd.testing.assert_frame_equal(a, c)
    # end test_byte_identical

    # Command line
    def test_main(self):
        """
        Exit codes and plot files
        """
        path = self._config(TINY)
        out = os.path.join(self.directory, 'out')
        with contextlib.redirect_stdout(io.StringIO()) as stdout:
            self.assertEqual(main(['-q', 'validate', path]), 0)
        # end with
        self.assertIn(u'[experiment]', stdout.getvalue())
        with contextlib.redirect_stderr(io.StringIO()):
            self.assertEqual(main(['-q', 'validate', self._config(u"[nope]\n", 'bad.toml')]), 2)
            self.assertEqual(main(['-q', 'run', path, '--jobs', '-1']), 2)
            self.assertEqual(main(['-q', 'run', path, '--out', out, '--emit-plotdata', '--no-progress']), 0)
        # end with
        for name in ('runs.csv', 'summary.csv', 'details.jsonl', 'config.toml', 'plot_messages.csv',
                     'plot_robustness.csv', 'plot_exceedance.csv'):
            self.assertTrue(os.path.exists(os.path.join(out, name)))
        # end for
        messages = pd.read_csv(os.path.join(out, 'plot_messages.csv'))
        self.assertEqual(float(messages['avg_packets_per_node_mean'][0]), 2.0)
    # end test_main

    # Traces
    def test_trace(self):
        """
        One trace file per run with one line per channel
        """
        config = ExperimentConfig.load(self._config(TINY))
        out = os.path.join(self.directory, 'out')
        run_experiment(config, out, trace=True, progress=False)
        with open(os.path.join(out, 'trace', 'push_pull_n2_F0_r0.txt'), 'r') as f:
            lines = [line.split() for line in f.read().splitlines()]
        # end with
        self.assertEqual(len(lines), 2)
        self.assertEqual(sorted((line[1], line[2]) for line in lines), [('0', '1'), ('1', '0')])
        self.assertEqual(sum(int(line[4]) for line in lines), 4)
    # end test_trace

# end Test_CLI


# Run test
if __name__ == '__main__':
    unittest.main()
# end if
