# -*- coding: utf-8 -*-
#

# Imports
from .bitsets import columns_mask, empty_rows, locate, n_words, popcount, scatter_or_, set_bits_, test_bits, unpack
from .exceptions import ClosedChannel, ConfigError, DoubleOpen, GossipSimError, GraphModelError, NoNeighbor, ResourceGuardError
from .formulas import Formula, log, loglog, round4
from .random_streams import RandomStreams, derive_seed, name_key

__all__ = [
    'columns_mask', 'empty_rows', 'locate', 'n_words', 'popcount', 'scatter_or_', 'set_bits_', 'test_bits', 'unpack',
    'ClosedChannel', 'ConfigError', 'DoubleOpen', 'GossipSimError', 'GraphModelError', 'NoNeighbor',
    'ResourceGuardError', 'Formula', 'log', 'loglog', 'round4', 'RandomStreams', 'derive_seed', 'name_key'
]
