# -*- coding: utf-8 -*-
#
# File : gossipsim/failure/FailureInjector.py
# Description : Applies a failure plan to a world.
# Date : 10th of March, 2025
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
from .FailurePlan import FailureInstant


# World hook failing the victims
class FailureInjector(object):
    """
    Fails the victims of a resolved plan when the world enters the gathering
    phase or reaches their failure step
    """

    # Constructor
    def __init__(self, plan, phase='phase2'):
        """
        Constructor
        :param plan: Resolved FailurePlan
        :param phase: Phase name standing for "before Phase II"
        """
        self.plan = plan
        self.phase = phase
        self.applied = False
    # end __init__

    # Phase boundary
    def on_phase(self, world, name):
        """
        Fail everybody when entering the configured phase
        """
        if self.plan.instant is FailureInstant.BEFORE_PHASE2 and name == self.phase and not self.applied:
            world.fail(self.plan.victims)
            self.applied = True
        # end if
    # end on_phase

    # Step start
    def on_step(self, world):
        """
        Fail the victims due at this step
        """
        if self.plan.instant is FailureInstant.AT_STEP and world.step_index == int(self.plan.step):
            world.fail(self.plan.victims)
            self.applied = True
        elif self.plan.instant is FailureInstant.UNIFORM_OVER_RUN:
            due = self.plan.victims[self.plan.fail_steps == world.step_index]
            if due.numel() > 0:
                world.fail(due)
            # end if
        # end if
    # end on_step

# end FailureInjector
