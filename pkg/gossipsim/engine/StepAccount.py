# -*- coding: utf-8 -*-
#
# File : gossipsim/engine/StepAccount.py
# Description : Communication accounting.
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
import copy


# Channels, packets and steps
class StepAccount(object):
    """
    Counters of one run or of one of its phases. A packet is one transmission
    over one channel in one direction, whatever it carries.
    """

    # Constructor
    def __init__(self, channels_opened=0, packets_sent=0, steps=0):
        """
        Constructor
        """
        self.channels_opened = channels_opened
        self.packets_sent = packets_sent
        self.steps = steps
    # end __init__

    ##############################################
    # PROPERTIES
    ##############################################

    # Index of the last begun step
    @property
    def step_index(self):
        """
        Index of the current (or last) step, -1 before the first one
        """
        return self.steps - 1
    # end step_index

    ##############################################
    # PUBLIC
    ##############################################

    # Copy
    def copy(self):
        """
        Independent copy
        """
        return copy.copy(self)
    # end copy

    # To dict
    def to_dict(self):
        """
        Counters as a dict
        """
        return {'steps': self.steps, 'channels_opened': self.channels_opened, 'packets_sent': self.packets_sent}
    # end to_dict

    ##############################################
    # OVERRIDE
    ##############################################

    # Sum
    def __add__(self, other):
        """
        Counter-wise sum
        """
        return StepAccount(
            self.channels_opened + other.channels_opened,
            self.packets_sent + other.packets_sent,
            self.steps + other.steps
        )
    # end __add__

    # Equality
    def __eq__(self, other):
        return isinstance(other, StepAccount) and self.to_dict() == other.to_dict()
    # end __eq__

    # Representation
    def __repr__(self):
        return u"StepAccount(steps={}, channels_opened={}, packets_sent={})".format(
            self.steps, self.channels_opened, self.packets_sent
        )
    # end __repr__

# end StepAccount
