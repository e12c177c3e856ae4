# -*- coding: utf-8 -*-
#
# File : gossipsim/failure/functional.py
# Description : Failure injection.
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
from gossipsim.utils.exceptions import GossipSimError
from .FailureInjector import FailureInjector


# Apply a plan to a world
def apply(world, plan, phase='phase2'):
    """
    Set the victims' failed flags at the plan's instant. F = 0 leaves the world unchanged.
    :param world: World
    :param plan: Resolved FailurePlan
    :param phase: Phase name at which before_phase2 failures happen
    :return: The FailureInjector hook, None for F = 0
    """
    if plan is None or plan.count == 0:
        return None
    # end if
    if not plan.is_resolved:
        raise GossipSimError(u"failure plan must be resolved before it is applied")
    # end if
    injector = FailureInjector(plan, phase)
    world.add_hook(injector)
    return injector
# end apply
