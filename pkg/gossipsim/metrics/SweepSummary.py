# -*- coding: utf-8 -*-
#
# File : gossipsim/metrics/SweepSummary.py
# Description : Statistics of the runs of one cell.
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


# Summary of a cell
class SweepSummary(object):
    """
    Mean, standard deviation, minimum and maximum of every scalar metric over
    the repetitions of one (algorithm, n, F, constants) cell
    """

    # Statistics per metric
    STATISTICS = ('mean', 'stddev', 'min', 'max')

    # Constructor
    def __init__(self, key, repetitions, statistics):
        """
        Constructor
        :param key: Group key (tuple)
        :param repetitions: Number of runs
        :param statistics: OrderedDict metric -> OrderedDict(mean, stddev, min, max)
        """
        self.key = key
        self.repetitions = repetitions
        self.statistics = statistics
    # end __init__

    # Statistic of a metric
    def get(self, metric, statistic='mean'):
        """
        One statistic of one metric
        """
        return self.statistics[metric][statistic]
    # end get

    # Flat row
    def to_row(self, key_names=None):
        """
        Flat dict: key fields, repetitions, then <metric>_<statistic>
        :param key_names: Names of the key fields
        """
        row = OrderedDict()
        if key_names is not None:
            row.update(zip(key_names, self.key))
        else:
            row['key'] = str(self.key)
        # end if
        row['repetitions'] = self.repetitions
        for metric, stats in self.statistics.items():
            for name in SweepSummary.STATISTICS:
                row[u"{}_{}".format(metric, name)] = stats[name]
            # end for
        # end for
        return row
    # end to_row

    # Representation
    def __repr__(self):
        return u"SweepSummary({}, repetitions={})".format(self.key, self.repetitions)
    # end __repr__

# end SweepSummary
