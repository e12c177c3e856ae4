# -*- coding: utf-8 -*-
#
# File : gossipsim/utils/exceptions.py
# Description : Exceptions raised by the simulator.
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


# Base exception
class GossipSimError(Exception):
    """
    Base class of every error raised by gossipsim
    """
    pass
# end GossipSimError


# Invalid graph model parameters
class GraphModelError(GossipSimError, ValueError):
    """
    Invalid graph model parameters (p outside (0, 1], odd stub count, ...)
    """
    pass
# end GraphModelError


# A node without neighbor was asked to sample one
class NoNeighbor(GossipSimError):
    """
    Raised when a node with no neighbor (degree 0) has to pick a neighbor
    """

    # Constructor
    def __init__(self, node):
        """
        Constructor
        :param node: The isolated node
        """
        super(NoNeighbor, self).__init__(u"Node {} has no neighbor".format(node))
        self.node = node
    # end __init__

# end NoNeighbor


# Second outgoing channel in a step
class DoubleOpen(GossipSimError):
    """
    Raised when a node opens a second outgoing channel in the same step
    """

    # Constructor
    def __init__(self, node, step):
        """
        Constructor
        :param node: Opener
        :param step: Current step
        """
        super(DoubleOpen, self).__init__(u"Node {} already opened a channel in step {}".format(node, step))
        self.node = node
        self.step = step
    # end __init__

# end DoubleOpen


# Channel used outside its step
class ClosedChannel(GossipSimError):
    """
    Raised when a channel is used after the step it was opened in
    """
    pass
# end ClosedChannel


# Configuration error
class ConfigError(GossipSimError):
    """
    Configuration error, located in the config file when possible
    """

    # Constructor
    def __init__(self, message, path=None, line=None, key=None):
        """
        Constructor
        :param message: Error message
        :param path: Config file path
        :param line: Line number (1-based) or None
        :param key: Offending key or None
        """
        self.message = message
        self.path = path
        self.line = line
        self.key = key
        super(ConfigError, self).__init__(self.located())
    # end __init__

    # Message with location prefix
    def located(self):
        """
        Message prefixed with path:line
        :return: The message
        """
        if self.path is not None and self.line is not None:
            return u"{}:{}: {}".format(self.path, self.line, self.message)
        elif self.path is not None:
            return u"{}: {}".format(self.path, self.message)
        # end if
        return self.message
    # end located

# end ConfigError


# Resource guard
class ResourceGuardError(ConfigError):
    """
    Refuses configurations that would not fit in memory
    """
    pass
# end ResourceGuardError
