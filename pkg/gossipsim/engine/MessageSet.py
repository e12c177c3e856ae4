# -*- coding: utf-8 -*-
#
# File : gossipsim/engine/MessageSet.py
# Description : Set of message origins.
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
import torch
from gossipsim.utils import bitsets


# Set of origins
class MessageSet(object):
    """
    Set of original messages, identified by their origin node. Stored as one
    bit row over the tracked origins of a world (all nodes in full mode).
    """

    # Constructor
    def __init__(self, row, universe):
        """
        Constructor
        :param row: (W,) int64 bit row
        :param universe: (K,) long tensor, origin of every bit column
        """
        self.row = row
        self.universe = universe
    # end __init__

    ##############################################
    # PUBLIC
    ##############################################

    # Origins in the set
    def origins(self):
        """
        Sorted list of origins
        """
        columns = bitsets.unpack(self.row, self.universe.numel())
        return self.universe[torch.tensor(columns, dtype=torch.int64)].tolist() if len(columns) > 0 else []
    # end origins

    # Subset test
    def issubset(self, other):
        """
        Is every origin of self in other
        """
        return bool(((self.row & other.row) == self.row).all())
    # end issubset

    # Copy
    def copy(self):
        """
        Independent copy
        """
        return MessageSet(self.row.clone(), self.universe)
    # end copy

    ##############################################
    # OVERRIDE
    ##############################################

    # Union
    def __or__(self, other):
        """
        Union of two sets over the same universe
        """
        return MessageSet(self.row | other.row, self.universe)
    # end __or__

    # Membership
    def __contains__(self, origin):
        """
        Is origin in the set
        """
        columns = (self.universe == int(origin)).nonzero().view(-1)
        if columns.numel() == 0:
            return False
        # end if
        return bool(bitsets.test_bits(self.row.view(1, -1), columns)[0, 0])
    # end __contains__

    # Size
    def __len__(self):
        """
        Number of origins
        """
        return int(bitsets.popcount(self.row))
    # end __len__

    # Equality
    def __eq__(self, other):
        return isinstance(other, MessageSet) and torch.equal(self.row, other.row)
    # end __eq__

    # Representation
    def __repr__(self):
        return u"MessageSet({})".format(self.origins())
    # end __repr__

    ##############################################
    # STATIC
    ##############################################

    # Set of given origins
    @staticmethod
    def of(origins, universe):
        """
        Set holding the given origins
        :param origins: Iterable of nodes, all in universe
        :param universe: (K,) long tensor of tracked origins (sorted)
        :return: MessageSet
        """
        origins = torch.as_tensor(list(origins), dtype=torch.int64)
        columns = torch.searchsorted(universe, origins)
        return MessageSet(bitsets.columns_mask(columns, universe.numel()), universe)
    # end of

# end MessageSet
