# -*- coding: utf-8 -*-
#
# File : gossipsim/graph/GraphModel.py
# Description : Random graph model parameters.
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
from enum import Enum
from gossipsim.utils.exceptions import GraphModelError


# Graph models
class GraphKind(Enum):
    """
    Supported random graph models
    """
    ERDOS_RENYI = 'erdos_renyi'
    CONFIGURATION = 'configuration'
# end GraphKind


# Random graph model
class GraphModel(object):
    """
    Parameters of a random graph: G(n, p), or the configuration model with
    d stubs per node.
    """

    # Constructor
    def __init__(self, kind, n, p=None, d=None, allow_sparse=False):
        """
        Constructor
        :param kind: GraphKind (or its string value)
        :param n: Number of nodes
        :param p: Edge probability (Erdos-Renyi)
        :param d: Stubs per node (configuration model)
        :param allow_sparse: Accept p*n < 1 (degenerate sweeps)
        """
        self.kind = GraphKind(kind)
        self.n = int(n)
        self.p = float(p) if p is not None else None
        self.d = int(d) if d is not None else None
        self.allow_sparse = allow_sparse
        self.validate()
    # end __init__

    ##############################################
    # PUBLIC
    ##############################################

    # Erdos-Renyi model
    @classmethod
    def erdos_renyi(cls, n, p, **kwargs):
        """
        G(n, p)
        """
        return cls(GraphKind.ERDOS_RENYI, n, p=p, **kwargs)
    # end erdos_renyi

    # Configuration model
    @classmethod
    def configuration(cls, n, d):
        """
        Configuration model, d stubs per node
        """
        return cls(GraphKind.CONFIGURATION, n, d=d)
    # end configuration

    # Check parameters
    def validate(self):
        """
        Check model invariants
        """
        if self.n < 1:
            raise GraphModelError(u"n must be positive, got {}".format(self.n))
        # end if
        if self.kind is GraphKind.ERDOS_RENYI:
            if self.p is None or not 0.0 < self.p <= 1.0:
                raise GraphModelError(u"p must be in (0, 1], got {}".format(self.p))
            # end if
            if self.p * self.n < 1.0 and not self.allow_sparse:
                raise GraphModelError(u"p*n = {} < 1 gives a degenerate graph".format(self.p * self.n))
            # end if
        else:
            if self.d is None or self.d < 1:
                raise GraphModelError(u"d must be a positive integer, got {}".format(self.d))
            # end if
            if (self.d * self.n) % 2 != 0:
                raise GraphModelError(u"d*n = {} must be even".format(self.d * self.n))
            # end if
        # end if
    # end validate

    # Generate a graph
    def generate(self, seed):
        """
        Generate a graph of this model
        :param seed: Topology seed
        :return: A Graph
        """
        from .ErdosRenyiGraph import ErdosRenyiGraph
        from .ConfigurationGraph import ConfigurationGraph
        if self.kind is GraphKind.ERDOS_RENYI:
            return ErdosRenyiGraph.generate(self, seed)
        # end if
        return ConfigurationGraph(self, seed)
    # end generate

    # Parameter as printed in results (p or d)
    @property
    def parameter(self):
        """
        p for G(n, p), d for the configuration model
        """
        return self.p if self.kind is GraphKind.ERDOS_RENYI else self.d
    # end parameter

    ##############################################
    # OVERRIDE
    ##############################################

    # Representation
    def __repr__(self):
        """
        Representation
        """
        if self.kind is GraphKind.ERDOS_RENYI:
            return u"GraphModel(erdos_renyi, n={}, p={})".format(self.n, self.p)
        # end if
        return u"GraphModel(configuration, n={}, d={})".format(self.n, self.d)
    # end __repr__

    # Equality
    def __eq__(self, other):
        return isinstance(other, GraphModel) and (self.kind, self.n, self.p, self.d) == (other.kind, other.n, other.p, other.d)
    # end __eq__

    # Hash
    def __hash__(self):
        return hash((self.kind, self.n, self.p, self.d))
    # end __hash__

# end GraphModel


# Generate a graph
def generate(model, seed):
    """
    Generate a graph; deterministic given (model, seed)
    :param model: GraphModel
    :param seed: Topology seed
    :return: Graph
    """
    return model.generate(seed)
# end generate
