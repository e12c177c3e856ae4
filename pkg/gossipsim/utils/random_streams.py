# -*- coding: utf-8 -*-
#
# File : gossipsim/utils/random_streams.py
# Description : Named random sub-streams derived from one seed.
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

# Imports
import zlib
import numpy as np
import torch


# Stable integer key of a name
def name_key(name):
    """
    Stable non-negative integer of a string
    :param name: Name
    :return: CRC32 of the UTF-8 encoding
    """
    return zlib.crc32(str(name).encode('utf-8'))
# end name_key


# Derive a 63-bit seed
def derive_seed(seed, *key):
    """
    Derive a seed from a parent seed and a key path.
    Depends only on (seed, key), never on call order.
    :param seed: Parent seed (non-negative integer)
    :param key: Non-negative integers or strings
    :return: Integer in [0, 2^63)
    """
    spawn_key = tuple(name_key(k) if isinstance(k, str) else int(k) for k in key)
    words = np.random.SeedSequence(entropy=int(seed), spawn_key=spawn_key).generate_state(2, dtype=np.uint32)
    return ((int(words[0]) & 0x7FFFFFFF) << 32) | int(words[1])
# end derive_seed


# Named random streams
class RandomStreams(object):
    """
    One torch.Generator per concern (topology, each protocol phase, failure
    sampling, ...). Streams are created on first use and are independent of
    each other, so drawing from one never shifts another.
    """

    # Constructor
    def __init__(self, seed):
        """
        Constructor
        :param seed: Run seed
        """
        self.seed = int(seed)
        self._generators = dict()
    # end __init__

    # Generator of a named stream
    def generator(self, name):
        """
        Generator of a stream, created on first use
        :param name: Stream name
        :return: torch.Generator
        """
        if name not in self._generators:
            g = torch.Generator()
            g.manual_seed(derive_seed(self.seed, name))
            self._generators[name] = g
        # end if
        return self._generators[name]
    # end generator

    # Independent family of streams
    def child(self, name):
        """
        Independent family of streams (e.g. one per tree)
        :param name: Family name
        :return: RandomStreams
        """
        return RandomStreams(derive_seed(self.seed, name))
    # end child

    # Bernoulli draws
    def bernoulli(self, name, probability, size):
        """
        Independent Bernoulli trials
        :param name: Stream name
        :param probability: Success probability (clamped to [0, 1])
        :param size: Number of trials
        :return: Bool tensor
        """
        probability = min(max(float(probability), 0.0), 1.0)
        return torch.rand(size, generator=self.generator(name), dtype=torch.float64) < probability
    # end bernoulli

# end RandomStreams
