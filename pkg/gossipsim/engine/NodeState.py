# -*- coding: utf-8 -*-
#
# File : gossipsim/engine/NodeState.py
# Description : Read-only view of one node.
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
from gossipsim.engine.MessageSet import MessageSet


# State of one node
class NodeState(object):
    """
    Snapshot of the state of a node, assembled from the per-node tensors of
    a World
    """

    # Constructor
    def __init__(self, world, v):
        """
        Constructor
        :param world: World
        :param v: Node
        """
        self.id = int(v)
        self.msgs = MessageSet(world.msgs[v].clone(), world.origins)
        self.failed = bool(world.failed[v])
        self.active = bool(world.active[v])
        self.memory = [
            (int(u), int(t))
            for u, t in zip(world.memory[v].tolist(), world.memory_tags[v].tolist()) if u >= 0
        ]
        self.queue = world.queues.tokens_of(v) if world.queues is not None else []
        self.first_informed_step = {
            int(o): int(s) for o, s in zip(world.watch.tolist(), world.first_informed[v].tolist()) if s >= 0
        }
        provenance = world.provenance[v].tolist()
        self.provenance = tuple(provenance) if provenance[0] >= 0 else None
    # end __init__

    # Representation
    def __repr__(self):
        return u"NodeState(id={}, |msgs|={}, failed={}, active={}, memory={})".format(
            self.id, len(self.msgs), self.failed, self.active, self.memory
        )
    # end __repr__

# end NodeState
