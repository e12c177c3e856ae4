# -*- coding: utf-8 -*-
#
# File : gossipsim/metrics/RunMetrics.py
# Description : Metrics of one run.
# Date : 17th of March, 2025
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

# Scalar metrics, in output order
SCALARS = (
    'steps', 'channels_opened', 'packets_sent', 'avg_packets_per_node', 'max_packets_per_node', 'completed',
    'additional_lost'
)


# Metrics of a run
class RunMetrics(object):
    """
    Steps, channels and packets of a run, with the per-phase breakdown and
    the informed-fraction timeline
    """

    # Constructor
    def __init__(self, algorithm, n, seed, steps, channels_opened, packets_sent, max_packets_per_node, completed,
                 per_phase=None, informed_fraction_timeline=None, additional_lost=None, error=None, leader=None):
        """
        Constructor
        """
        self.algorithm = algorithm
        self.n = n
        self.seed = seed
        self.steps = steps
        self.channels_opened = channels_opened
        self.packets_sent = packets_sent
        self.avg_packets_per_node = packets_sent / float(n)
        self.max_packets_per_node = max_packets_per_node
        self.completed = completed
        self.per_phase = per_phase if per_phase is not None else OrderedDict()
        self.informed_fraction_timeline = informed_fraction_timeline
        self.additional_lost = additional_lost
        self.error = error
        self.leader = leader
        self.steps_plus_one_sufficient = None
    # end __init__

    # Scalar metrics
    def scalars(self):
        """
        Scalar metrics as an ordered dict
        """
        return OrderedDict((name, getattr(self, name)) for name in SCALARS)
    # end scalars

    # As a dict
    def to_dict(self):
        """
        All metrics as a JSON-ready dict
        """
        result = OrderedDict([('algorithm', self.algorithm), ('n', self.n), ('seed', self.seed)])
        result.update(self.scalars())
        result['steps_plus_one_sufficient'] = self.steps_plus_one_sufficient
        result['error'] = self.error
        result['leader'] = self.leader
        result['per_phase'] = self.per_phase
        result['informed_fraction_timeline'] = self.informed_fraction_timeline
        return result
    # end to_dict

    # Representation
    def __repr__(self):
        return u"RunMetrics({}, n={}, steps={}, packets={}, avg={:.3f}, completed={})".format(
            self.algorithm, self.n, self.steps, self.packets_sent, self.avg_packets_per_node, self.completed
        )
    # end __repr__

# end RunMetrics
