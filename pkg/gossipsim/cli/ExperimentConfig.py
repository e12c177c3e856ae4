# -*- coding: utf-8 -*-
#
# File : gossipsim/cli/ExperimentConfig.py
# Description : Experiment configuration files.
# Date : 19th of March, 2025
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
import hashlib
import json
import re
import tomllib
from collections import OrderedDict
from gossipsim.failure.FailurePlan import FailureInstant, FailurePlan
from gossipsim.graph.GraphModel import GraphKind, GraphModel
from gossipsim.protocols.ProtocolConstants import COEFFICIENTS, FORMULAS, ProtocolConstants
from gossipsim.protocols.functional import PROTOCOLS
from gossipsim.utils.exceptions import ConfigError, GraphModelError, ResourceGuardError
from gossipsim.utils.formulas import Formula

# Largest n simulated with full message sets
FULL_BITSET_LIMIT = 65536

# Tables, keys and defaults (None: no default)
SCHEMA = OrderedDict([
    ('experiment', OrderedDict([
        ('algorithm', None),
        ('n_sweep', None),
        ('F_sweep', [0]),
        ('repetitions', 1),
        ('master_seed', 0)
    ])),
    ('graph', OrderedDict([
        ('kind', GraphKind.ERDOS_RENYI.value),
        ('p', 'log(n)^2/n'),
        ('d', None),
        ('allow_sparse', False)
    ])),
    ('constants', OrderedDict([(key, None) for key in list(COEFFICIENTS) + list(FORMULAS)])),
    ('failure', OrderedDict([
        ('instant', FailureInstant.BEFORE_PHASE2.value),
        ('step', None),
        ('exclude_leader', True)
    ])),
    ('modes', OrderedDict([
        ('run_to_completion', True),
        ('tracked_subset_size', None),
        ('tree_count', 3),
        ('trace', False),
        ('leader_election', False),
        ('timeline', False),
        ('wallclock', False)
    ]))
])


# Experiment configuration
class ExperimentConfig(object):
    """
    Sweep over algorithms, graph sizes and failure counts, read from a TOML
    file with the tables [experiment], [graph], [constants], [failure] and
    [modes]. Unknown tables and keys are errors.
    """

    # Constructor
    def __init__(self, data, path=None, text=None):
        """
        Constructor, use load() for files
        :param data: Parsed TOML document (dict of tables)
        :param path: File path, for error messages
        :param text: File content, for error line numbers
        """
        self.path = path
        self._text = text
        self._check_keys(data)

        # Every default materialized
        self.tables = OrderedDict()
        for table, keys in SCHEMA.items():
            given = data.get(table, {})
            self.tables[table] = OrderedDict((key, given.get(key, default)) for key, default in keys.items())
        # end for

        experiment = self.tables['experiment']
        algorithms = experiment['algorithm']
        self.algorithms = [algorithms] if isinstance(algorithms, str) else list(algorithms or [])
        self.n_sweep = [int(n) for n in self._list('experiment', 'n_sweep')]
        self.F_sweep = [int(f) for f in self._list('experiment', 'F_sweep')]
        self.repetitions = self._int('experiment', 'repetitions')
        self.master_seed = self._int('experiment', 'master_seed')
        self.constant_overrides = OrderedDict(
            (key, value) for key, value in self.tables['constants'].items() if value is not None
        )
        self.modes = self.tables['modes']
        self.validate()
    # end __init__

    ##############################################
    # PROPERTIES
    ##############################################

    # Graph kind
    @property
    def graph_kind(self):
        """
        GraphKind of the sweep
        """
        return GraphKind(self.tables['graph']['kind'])
    # end graph_kind

    ##############################################
    # PUBLIC
    ##############################################

    # Check everything
    def validate(self):
        """
        Check sweeps, algorithms, graph parameters, constants and the resource guard
        """
        if len(self.algorithms) == 0:
            raise self._error(u"at least one algorithm is required", 'experiment', 'algorithm')
        # end if
        for algorithm in self.algorithms:
            if algorithm not in PROTOCOLS:
                raise self._error(
                    u"unknown algorithm '{}', expected one of {}".format(algorithm, sorted(PROTOCOLS)),
                    'experiment', 'algorithm'
                )
            # end if
        # end for
        if len(self.n_sweep) == 0 or any(n < 1 for n in self.n_sweep):
            raise self._error(u"n_sweep must be a non-empty list of positive sizes", 'experiment', 'n_sweep')
        # end if
        if len(self.F_sweep) == 0 or any(f < 0 for f in self.F_sweep):
            raise self._error(u"F_sweep must be a non-empty list of non-negative counts", 'experiment', 'F_sweep')
        # end if
        if self.repetitions < 1:
            raise self._error(u"repetitions must be at least 1, got {}".format(self.repetitions), 'experiment', 'repetitions')
        # end if

        # Graph, constants and failures per size
        try:
            GraphKind(self.tables['graph']['kind'])
        except ValueError:
            raise self._error(u"unknown graph kind '{}'".format(self.tables['graph']['kind']), 'graph', 'kind')
        # end try
        for n in self.n_sweep:
            self.graph_model(n)
            self.constants_for(n)
            for f in self.F_sweep:
                if f > n:
                    raise self._error(u"cannot fail {} nodes out of n={}".format(f, n), 'experiment', 'F_sweep')
                # end if
            # end for
        # end for
        self.failure_plan(0)

        # Modes
        if self._int('modes', 'tree_count') < 1:
            raise self._error(u"tree_count must be at least 1", 'modes', 'tree_count')
        # end if
        subset = self.modes['tracked_subset_size']
        if subset is not None and int(subset) < 1:
            raise self._error(u"tracked_subset_size must be positive", 'modes', 'tracked_subset_size')
        # end if
        if subset is None and max(self.n_sweep) > FULL_BITSET_LIMIT:
            raise ResourceGuardError(
                u"n={} needs modes.tracked_subset_size (full message sets are limited to n <= {})".format(
                    max(self.n_sweep), FULL_BITSET_LIMIT
                ),
                path=self.path,
                line=self._line('experiment', 'n_sweep'),
                key='n_sweep'
            )
        # end if
    # end validate

    # Graph model of a size
    def graph_model(self, n):
        """
        GraphModel for n; p formulas are evaluated at n and capped at 1
        :param n: Graph size
        :return: GraphModel
        """
        graph = self.tables['graph']
        try:
            if self.graph_kind is GraphKind.ERDOS_RENYI:
                p = graph['p']
                if isinstance(p, str):
                    p = Formula(p)(n=n) if n > 1 else 1.0
                # end if
                return GraphModel.erdos_renyi(n, min(float(p), 1.0), allow_sparse=bool(graph['allow_sparse']))
            # end if
            return GraphModel.configuration(n, graph['d'])
        except (GraphModelError, ConfigError) as e:
            key = 'p' if self.graph_kind is GraphKind.ERDOS_RENYI else 'd'
            raise self._error(u"{} (n={})".format(e, n), 'graph', key)
        # end try
    # end graph_model

    # Constants of a size
    def constants_for(self, n):
        """
        ProtocolConstants for n with the overrides of [constants]
        """
        try:
            return ProtocolConstants(n, **self.constant_overrides)
        except ConfigError as e:
            raise self._error(e.message, 'constants', e.key)
        # end try
    # end constants_for

    # Failure plan of a failure count
    def failure_plan(self, count):
        """
        Unresolved FailurePlan with F = count
        """
        failure = self.tables['failure']
        try:
            return FailurePlan(count, failure['instant'], failure['step'], bool(failure['exclude_leader']))
        except ValueError:
            raise self._error(u"unknown failure instant '{}'".format(failure['instant']), 'failure', 'instant')
        except ConfigError as e:
            raise self._error(e.message, 'failure', 'step')
        # end try
    # end failure_plan

    # Hash of the constants of a size
    def constants_hash(self, n):
        """
        Short digest of the resolved constants at n
        """
        payload = json.dumps(self.constants_for(n).to_dict(), sort_keys=True)
        return hashlib.sha1(payload.encode('utf-8')).hexdigest()[:12]
    # end constants_hash

    # Resolved configuration
    def describe(self):
        """
        TOML text of the configuration with every default materialized and,
        for each size, the formula and value of every constant
        """
        lines = list()
        for table, values in self.tables.items():
            if table == 'constants':
                continue
            # end if
            lines.append(u"[{}]".format(table))
            for key, value in values.items():
                if value is not None:
                    lines.append(u"{} = {}".format(key, _toml_value(value)))
                # end if
            # end for
            lines.append(u"")
        # end for
        for n in self.n_sweep:
            lines.append(u"# constants at n = {} ({})".format(n, self.constants_hash(n)))
            lines.append(u"[constants]" if n == self.n_sweep[0] else u"# [constants]")
            prefix = u"" if n == self.n_sweep[0] else u"# "
            for key, (formula, value) in self.constants_for(n).describe().items():
                if formula is None:
                    lines.append(u"{}{} = {}".format(prefix, key, _toml_value(value)))
                else:
                    lines.append(u"{}{} = \"{}\"  # = {}".format(prefix, key, formula, value))
                # end if
            # end for
            lines.append(u"")
        # end for
        return u"\n".join(lines)
    # end describe

    ##############################################
    # PRIVATE
    ##############################################

    # Reject unknown tables and keys
    def _check_keys(self, data):
        for table, values in data.items():
            if table not in SCHEMA:
                raise ConfigError(u"unknown table [{}]".format(table), path=self.path, line=self._line(table), key=table)
            # end if
            if not isinstance(values, dict):
                raise self._error(u"[{}] must be a table".format(table), table)
            # end if
            for key in values:
                if key not in SCHEMA[table]:
                    raise self._error(u"unknown key '{}' in [{}]".format(key, table), table, key)
                # end if
            # end for
        # end for
    # end _check_keys

    # List value
    def _list(self, table, key):
        value = self.tables[table][key]
        if value is None:
            raise self._error(u"missing required key '{}'".format(key), table, key)
        # end if
        if not isinstance(value, list):
            value = [value]
        # end if
        return value
    # end _list

    # Integer value
    def _int(self, table, key):
        value = self.tables[table][key]
        if isinstance(value, bool) or not isinstance(value, int):
            raise self._error(u"'{}' must be an integer, got {!r}".format(key, value), table, key)
        # end if
        return value
    # end _int

    # Located error
    def _error(self, message, table, key=None):
        return ConfigError(message, path=self.path, line=self._line(table, key), key=key)
    # end _error

    # Line of a table or key
    def _line(self, table, key=None):
        """
        1-based line of "[table]" or of "key =" inside it, None if not found
        """
        if self._text is None:
            return None
        # end if
        current = None
        header = None
        for number, line in enumerate(self._text.splitlines(), start=1):
            match = re.match(r'^\s*\[\s*([A-Za-z0-9_.-]+)\s*\]', line)
            if match is not None:
                current = match.group(1)
                if current == table and header is None:
                    header = number
                # end if
                continue
            # end if
            if key is not None and current == table and re.match(r'^\s*"?{}"?\s*='.format(re.escape(key)), line):
                return number
            # end if
        # end for
        return header
    # end _line

    ##############################################
    # STATIC
    ##############################################

    # Load a file
    @staticmethod
    def load(path):
        """
        Read and validate a TOML configuration
        :param path: Config file
        :return: ExperimentConfig
        """
        try:
            with open(path, 'rb') as f:
                raw = f.read()
            # end with
        except OSError as e:
            raise ConfigError(u"cannot read configuration: {}".format(e.strerror), path=str(path))
        # end try
        text = raw.decode('utf-8')
        try:
            data = tomllib.loads(text)
        except tomllib.TOMLDecodeError as e:
            match = re.search(r'line (\d+)', str(e))
            raise ConfigError(str(e), path=str(path), line=int(match.group(1)) if match else None)
        # end try
        return ExperimentConfig(data, path=str(path), text=text)
    # end load

# end ExperimentConfig


# TOML rendering of a value
def _toml_value(value):
    if isinstance(value, bool):
        return u"true" if value else u"false"
    elif isinstance(value, str):
        return u"\"{}\"".format(value)
    elif isinstance(value, list):
        return u"[{}]".format(u", ".join(_toml_value(v) for v in value))
    # end if
    return str(value)
# end _toml_value
