# -*- coding: utf-8 -*-
#
# File : gossipsim/utils/formulas.py
# Description : Base-2 logarithm helpers and constant formulas over n.
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
import ast
import math
import operator
from .exceptions import ConfigError


# Base-2 logarithm of n
def log(n):
    """
    Base-2 logarithm, 0 for n <= 1
    :param n: Graph size
    :return: log2(n)
    """
    return math.log2(n) if n > 1 else 0.0
# end log


# Guarded log log n
def loglog(n):
    """
    log2(log2(n)), never below 1 (small graphs)
    :param n: Graph size
    :return: max(log2(max(log2(n), 1)), 1)
    """
    return max(math.log2(max(log(n), 1.0)), 1.0)
# end loglog


# Round up to a multiple of four
def round4(x):
    """
    Round up to a multiple of four (long-steps)
    :param x: Value
    :return: Smallest multiple of 4 >= x
    """
    return 4 * int(math.ceil(x / 4.0))
# end round4


# Functions available to formulas
FUNCTIONS = {
    'log': log,
    'loglog': loglog,
    'ceil': math.ceil,
    'floor': math.floor,
    'round4': round4,
    'min': min,
    'max': max,
    'sqrt': math.sqrt
}

# Binary operators ("^" is read as a power)
BINARY_OPERATORS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
    ast.Pow: operator.pow,
    ast.BitXor: operator.pow
}

# Unary operators
UNARY_OPERATORS = {
    ast.USub: operator.neg,
    ast.UAdd: operator.pos
}


# A constant expressed as a function of n
class Formula(object):
    """
    Arithmetic expression over n and named coefficients, e.g. "ceil(log(n)/loglog(n) + 2)".
    Only numbers, the names given at evaluation time, + - * / ** ^ and the
    functions of FUNCTIONS are accepted.
    """

    # Constructor
    def __init__(self, text, variables=('n',)):
        """
        Constructor
        :param text: Expression text
        :param variables: Names the expression may use
        """
        self.text = str(text).strip()
        self.variables = tuple(variables)
        try:
            self._tree = ast.parse(self.text.replace('^', '**'), mode='eval')
        except SyntaxError as e:
            raise ConfigError(u"invalid formula '{}': {}".format(self.text, e.msg))
        # end try
        self._check(self._tree.body)
    # end __init__

    ##############################################
    # PUBLIC
    ##############################################

    # Evaluate
    def __call__(self, **values):
        """
        Evaluate the expression
        :param values: Value of every variable
        :return: The numeric value
        """
        try:
            return self._eval(self._tree.body, values)
        except ZeroDivisionError:
            raise ConfigError(u"formula '{}' divides by zero for {}".format(self.text, values))
        # end try
    # end __call__

    # String
    def __str__(self):
        """
        Formula text
        """
        return self.text
    # end __str__

    # Representation
    def __repr__(self):
        """
        Representation
        """
        return u"Formula('{}')".format(self.text)
    # end __repr__

    # Equality on text
    def __eq__(self, other):
        return isinstance(other, Formula) and other.text == self.text
    # end __eq__

    # Hash on text
    def __hash__(self):
        return hash(self.text)
    # end __hash__

    ##############################################
    # PRIVATE
    ##############################################

    # Reject anything outside the whitelist
    def _check(self, node):
        """
        Check the syntax tree
        :param node: AST node
        """
        if isinstance(node, ast.Constant):
            if isinstance(node.value, bool) or not isinstance(node.value, (int, float)):
                raise ConfigError(u"formula '{}': only numeric literals are allowed".format(self.text))
            # end if
        elif isinstance(node, ast.Name):
            if node.id not in self.variables:
                raise ConfigError(u"formula '{}': unknown name '{}'".format(self.text, node.id))
            # end if
        elif isinstance(node, ast.BinOp):
            if type(node.op) not in BINARY_OPERATORS:
                raise ConfigError(u"formula '{}': operator not allowed".format(self.text))
            # end if
            self._check(node.left)
            self._check(node.right)
        elif isinstance(node, ast.UnaryOp):
            if type(node.op) not in UNARY_OPERATORS:
                raise ConfigError(u"formula '{}': operator not allowed".format(self.text))
            # end if
            self._check(node.operand)
        elif isinstance(node, ast.Call):
            if not isinstance(node.func, ast.Name) or node.func.id not in FUNCTIONS or node.keywords:
                raise ConfigError(u"formula '{}': unknown function".format(self.text))
            # end if
            for arg in node.args:
                self._check(arg)
            # end for
        else:
            raise ConfigError(u"formula '{}': unsupported expression".format(self.text))
        # end if
    # end _check

    # Evaluate a node
    def _eval(self, node, values):
        """
        Evaluate a checked node
        """
        if isinstance(node, ast.Constant):
            return node.value
        elif isinstance(node, ast.Name):
            return values[node.id]
        elif isinstance(node, ast.BinOp):
            return BINARY_OPERATORS[type(node.op)](self._eval(node.left, values), self._eval(node.right, values))
        elif isinstance(node, ast.UnaryOp):
            return UNARY_OPERATORS[type(node.op)](self._eval(node.operand, values))
        # end if
        return FUNCTIONS[node.func.id](*[self._eval(a, values) for a in node.args])
    # end _eval

# end Formula
