# -*- coding: utf-8 -*-
#
# File : gossipsim/failure/FailurePlan.py
# Description : Node failure plans.
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
import logging
from enum import Enum
import torch
from gossipsim.utils.exceptions import ConfigError

logger = logging.getLogger(__name__)


# When victims fail
class FailureInstant(Enum):
    """
    before_phase2: at the start of the gathering phase (start of the run for
    single-phase protocols); at_step: at the start of a given step;
    uniform_over_run: each victim at its own uniform step
    """
    BEFORE_PHASE2 = 'before_phase2'
    AT_STEP = 'at_step'
    UNIFORM_OVER_RUN = 'uniform_over_run'
# end FailureInstant


# Failure plan
class FailurePlan(object):
    """
    F nodes chosen uniformly without replacement fail at the configured
    instant. Failures are non-malicious: failed nodes stop communicating and
    storing.
    """

    # Constructor
    def __init__(self, count=0, instant=FailureInstant.BEFORE_PHASE2, step=None, exclude_leader=True):
        """
        Constructor
        :param count: Number of victims F
        :param instant: FailureInstant
        :param step: Failure step for at_step
        :param exclude_leader: Never pick the leader
        """
        self.count = int(count)
        self.instant = FailureInstant(instant)
        self.step = step
        self.exclude_leader = exclude_leader
        self.victims = None
        self.fail_steps = None
        if self.count < 0:
            raise ConfigError(u"failure count must be non-negative, got {}".format(self.count))
        # end if
        if self.instant is FailureInstant.AT_STEP and (step is None or int(step) < 0):
            raise ConfigError(u"at_step failures need a non-negative step, got {}".format(step))
        # end if
    # end __init__

    ##############################################
    # PROPERTIES
    ##############################################

    # Resolved?
    @property
    def is_resolved(self):
        """
        Victims drawn
        """
        return self.victims is not None
    # end is_resolved

    ##############################################
    # PUBLIC
    ##############################################

    # Draw the victims
    def resolve(self, n, generator, leader=None, horizon=1):
        """
        Draw the victims of a run; depends only on the generator state, n and F
        :param n: Graph size
        :param generator: The run's failure stream
        :param leader: Leader to exclude (when exclude_leader is set)
        :param horizon: Run length, for uniform_over_run
        :return: A resolved copy of this plan
        """
        if self.count > n:
            raise ConfigError(u"cannot fail {} nodes out of {}".format(self.count, n))
        # end if
        plan = FailurePlan(self.count, self.instant, self.step, self.exclude_leader)
        order = torch.randperm(n, generator=generator)
        if self.exclude_leader and leader is not None and self.count < n:
            order = order[order != int(leader)]
        # end if
        plan.victims = torch.sort(order[:self.count])[0]
        if self.instant is FailureInstant.UNIFORM_OVER_RUN:
            plan.fail_steps = torch.randint(max(int(horizon), 1), (self.count,), generator=generator)
        # end if
        logger.debug(u"{} victims drawn among {} nodes ({})".format(self.count, n, self.instant.value))
        return plan
    # end resolve

    # Describe
    def to_dict(self):
        """
        Plan as a dict (victims included once resolved)
        """
        return {
            'count': self.count,
            'instant': self.instant.value,
            'step': self.step,
            'exclude_leader': self.exclude_leader,
            'victims': self.victims.tolist() if self.victims is not None else None
        }
    # end to_dict

    # Representation
    def __repr__(self):
        return u"FailurePlan(F={}, instant={}, step={}, exclude_leader={})".format(
            self.count, self.instant.value, self.step, self.exclude_leader
        )
    # end __repr__

# end FailurePlan
