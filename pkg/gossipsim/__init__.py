# -*- coding: utf-8 -*-
#

# Imports
from . import utils
from . import graph
from . import engine
from . import failure
from . import protocols
from . import metrics
from . import cli


# All gossipsim's modules
__all__ = ['utils', 'graph', 'engine', 'failure', 'protocols', 'metrics', 'cli']
