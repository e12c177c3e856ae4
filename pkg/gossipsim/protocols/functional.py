# -*- coding: utf-8 -*-
#
# File : gossipsim/protocols/functional.py
# Description : Functional interface of the protocols.
# Date : 15th of March, 2025
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
from .FastGossiping import FastGossiping
from .LeaderElection import LeaderElection
from .MemoryGossiping import MemoryGossiping
from .MemoryGossipingTwice import MemoryGossipingTwice
from .PushPull import PushPull

# Algorithm name -> driver
PROTOCOLS = {
    PushPull.name: PushPull,
    FastGossiping.name: FastGossiping,
    LeaderElection.name: LeaderElection,
    MemoryGossiping.name: MemoryGossiping,
    MemoryGossipingTwice.name: MemoryGossipingTwice
}


# Push-pull baseline
def run_push_pull(g, consts=None, seed=0, **kwargs):
    """
    Push-pull until everybody knows everything (or the step cap)
    :param g: Graph
    :param consts: ProtocolConstants
    :param seed: Run seed
    :return: RunOutcome
    """
    return PushPull(g, consts, seed, **kwargs).run()
# end run_push_pull


# Fast-gossiping
def run_fast_gossiping(g, consts=None, seed=0, **kwargs):
    """
    Fast-gossiping with random walks
    :return: RunOutcome
    """
    return FastGossiping(g, consts, seed, **kwargs).run()
# end run_fast_gossiping


# Leader election
def run_leader_election(g, consts=None, seed=0, **kwargs):
    """
    Leader election, outcome.leader is the elected node
    :return: RunOutcome
    """
    return LeaderElection(g, consts, seed, **kwargs).run()
# end run_leader_election


# Memory-model gossiping
def run_memory_gossiping(g, consts=None, seed=0, leader=None, **kwargs):
    """
    Memory-model gossiping around a leader
    :return: RunOutcome
    """
    return MemoryGossiping(g, consts, seed, leader=leader, **kwargs).run()
# end run_memory_gossiping


# Memory-model gossiping over independent trees
def run_memory_gossiping_twice(g, consts=None, seed=0, leader=None, failure_plan=None, tree_count=2, **kwargs):
    """
    Memory-model gossiping over independent trees under a failure plan
    :param tree_count: Number of independent executions
    :return: RunOutcome with additional_lost
    """
    return MemoryGossipingTwice(
        g, consts, seed, leader=leader, failure_plan=failure_plan, tree_count=tree_count, **kwargs
    ).run()
# end run_memory_gossiping_twice
