# -*- coding: utf-8 -*-
#

# Imports
from .GraphModel import GraphKind, GraphModel, generate
from .Graph import Graph
from .ErdosRenyiGraph import ErdosRenyiGraph
from .ConfigurationGraph import ConfigurationGraph

__all__ = ['GraphKind', 'GraphModel', 'generate', 'Graph', 'ErdosRenyiGraph', 'ConfigurationGraph']
