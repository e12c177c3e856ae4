# -*- coding: utf-8 -*-
#

# Imports
from .Channel import ChannelBatch, ChannelKind, ChannelRef, Direction
from .MessageSet import MessageSet
from .NodeState import NodeState
from .StepAccount import StepAccount
from .World import World, MEMORY_SLOTS, SLOT_CHILD, SLOT_CONTACT, SLOT_EMPTY, SLOT_RECEIPT
from .functional import begin_step, end_step, open_channel, send

__all__ = [
    'ChannelBatch', 'ChannelKind', 'ChannelRef', 'Direction', 'MessageSet', 'NodeState', 'StepAccount', 'World',
    'MEMORY_SLOTS', 'SLOT_CHILD', 'SLOT_CONTACT', 'SLOT_EMPTY', 'SLOT_RECEIPT', 'begin_step', 'end_step',
    'open_channel', 'send'
]
