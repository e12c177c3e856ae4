# -*- coding: utf-8 -*-
#
# File : gossipsim/engine/functional.py
# Description : Functional interface of the engine.
# Date : 6th of March, 2025
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
from .Channel import ChannelKind, ChannelRef


# Start a step
def begin_step(world):
    """
    Empty the channel table and advance the step index
    :param world: World
    """
    world.begin_step()
# end begin_step


# Open a channel
def open_channel(world, v, target, kind=ChannelKind.UNIFORM):
    """
    Open a channel from v to target
    :param world: World
    :param v: Opener
    :param target: Callee
    :param kind: ChannelKind
    :return: ChannelRef, None when v has failed
    """
    return world.open_channel(v, target, kind)
# end open_channel


# Send over a channel
def send(world, ch, direction, payload=None):
    """
    Send one packet over a channel
    :param world: World
    :param ch: ChannelRef or ChannelBatch
    :param direction: Direction
    :param payload: MessageSet, default the sender's set
    :return: True if delivered (bool tensor for a batch)
    """
    delivered = world.send(ch, direction, payload)
    if isinstance(ch, ChannelRef):
        return bool(delivered[0])
    # end if
    return delivered
# end send


# Close a step
def end_step(world):
    """
    Merge buffered packets and close all channels
    :param world: World
    """
    world.end_step()
# end end_step
