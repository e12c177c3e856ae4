# -*- coding: utf-8 -*-
#
# File : gossipsim/protocols/RunOutcome.py
# Description : Result of one protocol run.
# Date : 8th of March, 2025
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
from collections import OrderedDict
import torch
from gossipsim.engine.StepAccount import StepAccount

# Reported, not raised
STEP_CAP_EXCEEDED = 'StepCapExceeded'
NO_CANDIDATE = 'NoCandidate'
LEADER_FAILED = 'LeaderFailed'


# Outcome of a run
class RunOutcome(object):
    """
    Everything a protocol run produced: completion, step and packet counts,
    leader, gathered set and the optional observations (timeline, watch
    list, walk statistics, trace)
    """

    # Constructor
    def __init__(self, algorithm, n, seed, completed=False, steps_used=0, account=None, phases=None,
                 packets_per_node=None, leader=None, gathered_at_leader=None, error=None, additional_lost=None,
                 victims=None, constants=None):
        """
        Constructor
        :param algorithm: Algorithm name
        :param n: Graph size
        :param seed: Run seed
        :param completed: All alive nodes know all tracked origins of alive nodes
        :param steps_used: Steps executed
        :param account: StepAccount of the run
        :param phases: OrderedDict phase -> StepAccount
        :param packets_per_node: (n,) long tensor
        :param leader: Leader node or None
        :param gathered_at_leader: MessageSet of the leader after the gathering phase
        :param error: None or one of the reported error names
        :param additional_lost: Healthy origins missing from every gathered set
        :param victims: Failed nodes
        :param constants: ProtocolConstants used
        """
        self.algorithm = algorithm
        self.n = n
        self.seed = seed
        self.completed = completed
        self.steps_used = steps_used
        self.account = account if account is not None else StepAccount()
        self.phases = phases if phases is not None else OrderedDict()
        self.packets_per_node = packets_per_node if packets_per_node is not None else torch.zeros(n, dtype=torch.int64)
        self.leader = leader
        self.gathered_at_leader = gathered_at_leader
        self.error = error
        self.additional_lost = additional_lost
        self.victims = victims if victims is not None else []
        self.constants = constants
        self.timeline = None
        self.watch = None
        self.walk_rounds = list()
        self.trace = None
        self.extra = OrderedDict()
    # end __init__

    ##############################################
    # PROPERTIES
    ##############################################

    # Metrics
    @property
    def metrics(self):
        """
        RunMetrics of this run
        """
        from gossipsim.metrics.functional import record
        return record(self)
    # end metrics

    ##############################################
    # PUBLIC
    ##############################################

    # Copy the observations of a world
    def observe(self, world):
        """
        Take counters and observations from a finished world
        :param world: World
        """
        self.steps_used = world.steps
        self.account = world.account.copy()
        self.phases = world.phase_breakdown()
        self.packets_per_node = world.packets_per_node.clone()
        self.timeline = world.timeline
        self.trace = world.trace
        if world.watch.numel() > 0:
            self.watch = OrderedDict([
                ('origins', world.watch.tolist()),
                ('counts', torch.stack(world.watch_counts).tolist()),
                ('first_informed', world.first_informed.tolist())
            ])
        # end if
        return self
    # end observe

    # Add the counters of another world
    def absorb(self, world, prefix=None):
        """
        Add the packets and channels of another world (leader election, extra trees)
        :param world: World
        :param prefix: Phase name prefix, None to merge into the same phase names
        """
        self.account.channels_opened += world.account.channels_opened
        self.account.packets_sent += world.account.packets_sent
        self.packets_per_node += world.packets_per_node
        for name, account in world.phase_breakdown().items():
            key = name if prefix is None else u"{}.{}".format(prefix, name)
            if key in self.phases:
                self.phases[key] = self.phases[key] + StepAccount(account.channels_opened, account.packets_sent, 0)
            else:
                self.phases[key] = account
            # end if
        # end for
        return self
    # end absorb

    # Representation
    def __repr__(self):
        return u"RunOutcome({}, n={}, completed={}, steps={}, packets={}, error={})".format(
            self.algorithm, self.n, self.completed, self.steps_used, self.account.packets_sent, self.error
        )
    # end __repr__

# end RunOutcome
