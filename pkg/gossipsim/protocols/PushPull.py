# -*- coding: utf-8 -*-
#
# File : gossipsim/protocols/PushPull.py
# Description : Simple push-pull gossiping.
# Date : 9th of March, 2025
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
from .Protocol import Protocol
from .RunOutcome import STEP_CAP_EXCEEDED


# Push-pull baseline
class PushPull(Protocol):
    """
    Every step, every node opens a channel to a uniform neighbor and performs
    push and pull with its whole message set, until everybody knows
    everything or the step cap is hit
    """

    name = 'push_pull'
    failure_phase = 'push_pull'

    # Run
    def _run(self):
        """
        Run push-pull
        """
        self.resolve_failures()
        world = self.new_world()
        world.enter_phase('push_pull')
        self._pushpull(world, self.streams.generator('push_pull'), self.constants.step_cap, True)
        completed = world.is_complete()
        return self.outcome(world, completed=completed, error=None if completed else STEP_CAP_EXCEEDED)
    # end _run

# end PushPull
