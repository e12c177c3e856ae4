# -*- coding: utf-8 -*-
#
# File : gossipsim/protocols/ProtocolConstants.py
# Description : Constants of the gossiping protocols.
# Date : 8th of March, 2025
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
import re
from collections import OrderedDict
from gossipsim.utils.exceptions import ConfigError
from gossipsim.utils.formulas import Formula


# Coefficients and their defaults
COEFFICIENTS = OrderedDict([
    ('ell', 1.0),
    ('rho', 0.8),
    ('c_moves', 1.0)
])

# Derived constants, as functions of n and the coefficients
FORMULAS = OrderedDict([
    ('walk_probability', 'ell/log(n)'),
    ('phase1_steps', 'ceil(1.2*loglog(n))'),
    ('phase2_rounds', 'ceil(log(n)/loglog(n))'),
    ('phase2_walk_steps', 'ceil(log(n)/loglog(n) + 2)'),
    ('phase2_bcast_steps', 'ceil(0.5*loglog(n))'),
    ('phase3_steps', 'ceil(8*log(n)/loglog(n))'),
    ('memory_phase1_push_steps', 'round4(2.0*log(n))'),
    ('memory_phase1_pull_steps', 'floor(2.0*loglog(n))'),
    ('memory_phase3_steps', 'floor(log(n))'),
    ('leader_probability', 'log(n)^2/n'),
    ('leader_push_steps', 'ceil(log(n) + rho*loglog(n))'),
    ('leader_pull_steps', 'ceil(rho*loglog(n))'),
    ('step_cap', 'ceil(10*log(n))'),
    ('moves_cap', 'ceil(c_moves*log(n))')
])

# Constants that are probabilities, all others are step counts
PROBABILITIES = ('walk_probability', 'leader_probability')

# Names usable in formulas
VARIABLES = ('n',) + tuple(COEFFICIENTS.keys())


# Constants of one graph size
class ProtocolConstants(object):
    """
    Coefficients (ell, rho, c_moves) and the derived phase lengths of all
    protocols, evaluated for a graph size n. Every entry may be overridden by
    a number or a formula over n and the coefficients; step counts are
    clamped to at least 1, and everything is 0 for n = 1.
    """

    # Constructor
    def __init__(self, n, **overrides):
        """
        Constructor
        :param n: Graph size
        :param overrides: Coefficient or constant overrides (numbers or formula strings)
        """
        self.n = int(n)
        self.overrides = OrderedDict(overrides)
        for key in self.overrides:
            if key not in COEFFICIENTS and key not in FORMULAS:
                raise ConfigError(u"unknown constant '{}'".format(key), key=key)
            # end if
        # end for

        # Coefficients
        self.coefficients = OrderedDict()
        for key, default in COEFFICIENTS.items():
            value = self.overrides.get(key, default)
            if not isinstance(value, (int, float)) or isinstance(value, bool) or value <= 0:
                raise ConfigError(u"coefficient '{}' must be a positive number, got {!r}".format(key, value), key=key)
            # end if
            self.coefficients[key] = float(value)
        # end for

        # Derived constants
        self.formulas = OrderedDict(
            (key, Formula(self.overrides.get(key, text), VARIABLES)) for key, text in FORMULAS.items()
        )
        self.values = OrderedDict((key, self._evaluate(key)) for key in FORMULAS)
        self.validate()
    # end __init__

    ##############################################
    # PUBLIC
    ##############################################

    # Check invariants
    def validate(self):
        """
        All step counts positive, Phase I of the memory model made of long-steps
        """
        if self.n < 2:
            return
        # end if
        for key, value in self.values.items():
            if key not in PROBABILITIES and value < 1:
                raise ConfigError(u"constant '{}' must be positive, got {} for n={}".format(key, value, self.n), key=key)
            # end if
        # end for
        if self.memory_phase1_push_steps % 4 != 0:
            raise ConfigError(
                u"memory_phase1_push_steps must be a multiple of 4, got {} for n={}".format(
                    self.memory_phase1_push_steps, self.n
                ),
                key='memory_phase1_push_steps'
            )
        # end if
    # end validate

    # Formula text with coefficient values
    def expression(self, key):
        """
        Formula of a constant with the coefficients substituted, e.g. "1.0/log(n)"
        :param key: Constant name
        :return: Text
        """
        text = str(self.formulas[key])
        for name, value in self.coefficients.items():
            text = re.sub(r'\b{}\b'.format(name), repr(value), text)
        # end for
        return text
    # end expression

    # Resolved constants
    def describe(self):
        """
        Every coefficient and constant with its formula and value
        :return: OrderedDict name -> (formula text or None, value)
        """
        result = OrderedDict((key, (None, value)) for key, value in self.coefficients.items())
        for key, value in self.values.items():
            result[key] = (self.expression(key), value)
        # end for
        return result
    # end describe

    # As a plain dict
    def to_dict(self):
        """
        Name -> value
        """
        result = OrderedDict(self.coefficients)
        result.update(self.values)
        return result
    # end to_dict

    ##############################################
    # PRIVATE
    ##############################################

    # Evaluate a constant
    def _evaluate(self, key):
        """
        Value of a constant for this n
        """
        if self.n < 2:
            return 0.0 if key in PROBABILITIES else 0
        # end if
        value = self.formulas[key](n=self.n, **self.coefficients)
        if key in PROBABILITIES:
            return min(max(float(value), 0.0), 1.0)
        # end if
        value = int(value)
        if key in self.overrides and value < 1:
            return value
        # end if
        return max(value, 1)
    # end _evaluate

    ##############################################
    # OVERRIDE
    ##############################################

    # Attribute access to the constants
    def __getattr__(self, item):
        """
        Constants and coefficients as attributes
        """
        if item in ('values', 'coefficients'):
            raise AttributeError(item)
        # end if
        if item in self.values:
            return self.values[item]
        elif item in self.coefficients:
            return self.coefficients[item]
        # end if
        raise AttributeError(item)
    # end __getattr__

    # Representation
    def __repr__(self):
        return u"ProtocolConstants(n={}, {})".format(
            self.n, u", ".join(u"{}={}".format(k, v) for k, v in self.to_dict().items())
        )
    # end __repr__

# end ProtocolConstants
