# -*- coding: utf-8 -*-
#

# Imports
from .ProtocolConstants import COEFFICIENTS, FORMULAS, ProtocolConstants
from .RunOutcome import LEADER_FAILED, NO_CANDIDATE, STEP_CAP_EXCEEDED, RunOutcome
from .WalkToken import WalkQueue, WalkToken
from .Protocol import Protocol
from .PushPull import PushPull
from .FastGossiping import FastGossiping
from .LeaderElection import LeaderElection
from .DisseminationTree import DisseminationTree
from .MemoryGossiping import MemoryGossiping
from .MemoryGossipingTwice import MemoryGossipingTwice
from .functional import (PROTOCOLS, run_fast_gossiping, run_leader_election, run_memory_gossiping,
                         run_memory_gossiping_twice, run_push_pull)

__all__ = [
    'COEFFICIENTS', 'FORMULAS', 'ProtocolConstants', 'LEADER_FAILED', 'NO_CANDIDATE', 'STEP_CAP_EXCEEDED',
    'RunOutcome', 'WalkQueue', 'WalkToken', 'Protocol', 'PushPull', 'FastGossiping', 'LeaderElection',
    'DisseminationTree', 'MemoryGossiping', 'MemoryGossipingTwice', 'PROTOCOLS', 'run_fast_gossiping',
    'run_leader_election', 'run_memory_gossiping', 'run_memory_gossiping_twice', 'run_push_pull'
]
