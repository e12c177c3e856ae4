# -*- coding: utf-8 -*-
#
# File : gossipsim/engine/Channel.py
# Description : Channels of the random phone call model.
# Date : 5th of March, 2025
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
import torch


# How a channel target was chosen
class ChannelKind(Enum):
    """
    uniform: uniform neighbor, avoid: uniform outside l_v, addressed: stored link
    """
    UNIFORM = 'uniform'
    AVOID = 'avoid'
    ADDRESSED = 'addressed'
# end ChannelKind


# Transmission direction
class Direction(Enum):
    """
    push: opener to callee, pull: callee to opener
    """
    PUSH = 'push'
    PULL = 'pull'
# end Direction


# Channels opened together
class ChannelBatch(object):
    """
    Channels opened in one call during one step, one per opener.
    Only valid during the step they were opened in.
    """

    # Constructor
    def __init__(self, step, openers, callees, kind):
        """
        Constructor
        :param step: Step index
        :param openers: (k,) long tensor
        :param callees: (k,) long tensor
        :param kind: ChannelKind
        """
        self.step = step
        self.openers = openers
        self.callees = callees
        self.kind = ChannelKind(kind)
        self.packets = torch.zeros(openers.numel(), dtype=torch.int64)
    # end __init__

    ##############################################
    # PUBLIC
    ##############################################

    # Senders
    def senders(self, direction):
        """
        Sending side for a direction
        """
        return self.openers if Direction(direction) is Direction.PUSH else self.callees
    # end senders

    # Receivers
    def receivers(self, direction):
        """
        Receiving side for a direction
        """
        return self.callees if Direction(direction) is Direction.PUSH else self.openers
    # end receivers

    # One channel
    def ref(self, i):
        """
        Reference to channel i
        :param i: Index in the batch
        :return: ChannelRef
        """
        return ChannelRef(self, i)
    # end ref

    ##############################################
    # OVERRIDE
    ##############################################

    # Number of channels
    def __len__(self):
        return self.openers.numel()
    # end __len__

# end ChannelBatch


# One open channel
class ChannelRef(object):
    """
    Handle on a single channel of a batch
    """

    # Constructor
    def __init__(self, batch, index):
        """
        Constructor
        :param batch: ChannelBatch
        :param index: Position in the batch
        """
        self.batch = batch
        self.index = index
    # end __init__

    ##############################################
    # PROPERTIES
    ##############################################

    # Step
    @property
    def step(self):
        return self.batch.step
    # end step

    # Opener
    @property
    def opener(self):
        return int(self.batch.openers[self.index])
    # end opener

    # Callee
    @property
    def callee(self):
        return int(self.batch.callees[self.index])
    # end callee

    # Kind
    @property
    def kind(self):
        return self.batch.kind
    # end kind

    ##############################################
    # OVERRIDE
    ##############################################

    # Representation
    def __repr__(self):
        return u"ChannelRef(step={}, {} -> {}, {})".format(self.step, self.opener, self.callee, self.kind.value)
    # end __repr__

# end ChannelRef
