# -*- coding: utf-8 -*-
#
# File : gossipsim/engine/World.py
# Description : Synchronous executor of the random phone call model.
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
import logging
from collections import OrderedDict
import torch
from gossipsim.utils import bitsets
from gossipsim.utils.exceptions import ClosedChannel, DoubleOpen, GossipSimError
from gossipsim.utils.random_streams import RandomStreams
from .Channel import ChannelBatch, ChannelKind, Direction
from .MessageSet import MessageSet
from .NodeState import NodeState
from .StepAccount import StepAccount

logger = logging.getLogger(__name__)

# Memory list slot kinds
SLOT_EMPTY = 0
SLOT_CONTACT = 1
SLOT_CHILD = 2
SLOT_RECEIPT = 3

# Size of the memory list l_v
MEMORY_SLOTS = 4


# Simulation world
class World(object):
    """
    State of one run: per-node message sets, failure flags and protocol
    memories, the channel table of the current step and the communication
    counters.

    Every step is begin_step(), any number of open/send calls, end_step().
    Payloads are taken from the message sets as they were at the start of the
    step and merged at end_step, so the order of actions inside a step never
    changes the outcome.
    """

    # Unknown value of the minimum lane
    INF = torch.iinfo(torch.int64).max

    # Constructor
    def __init__(self, graph, streams=None, seed=0, tracked=None, watch=None, trace=False, timeline=False):
        """
        Constructor
        :param graph: Graph
        :param streams: RandomStreams of the run (default: built from seed)
        :param seed: Run seed, used when streams is None
        :param tracked: Origins followed exactly (default: all nodes)
        :param watch: Origins whose informed sets are followed step by step
        :param trace: Keep a per-channel trace
        :param timeline: Keep the informed fraction after every step
        """
        self.graph = graph
        self.n = graph.n
        self.streams = streams if streams is not None else RandomStreams(seed)

        # Tracked origins, one bit column each
        if tracked is None:
            self.origins = torch.arange(self.n, dtype=torch.int64)
        else:
            self.origins = torch.unique(torch.as_tensor(tracked, dtype=torch.int64))
        # end if
        self.k = self.origins.numel()
        self.column_of = torch.full((self.n,), -1, dtype=torch.int64)
        self.column_of[self.origins] = torch.arange(self.k, dtype=torch.int64)

        # m_v(0) = {v}
        self.msgs = bitsets.empty_rows(self.n, self.k)
        bitsets.set_bits_(self.msgs, self.origins, torch.arange(self.k, dtype=torch.int64))

        # Node state
        self.failed = torch.zeros(self.n, dtype=torch.bool)
        self.failed_at = torch.full((self.n,), -1, dtype=torch.int64)
        self.active = torch.zeros(self.n, dtype=torch.bool)
        self.values = torch.full((self.n,), World.INF, dtype=torch.int64)
        self.memory = torch.full((self.n, MEMORY_SLOTS), -1, dtype=torch.int64)
        self.memory_tags = torch.full((self.n, MEMORY_SLOTS), -1, dtype=torch.int64)
        self.memory_kinds = torch.zeros((self.n, MEMORY_SLOTS), dtype=torch.int8)
        self.provenance = torch.full((self.n, 2), -1, dtype=torch.int64)
        self.queues = None

        # Step state
        self.step_index = -1
        self.in_step = False
        self._batches = list()
        self._has_outgoing = torch.zeros(self.n, dtype=torch.bool)
        self._pending = list()
        self._pending_values = list()

        # Accounting
        self.account = StepAccount()
        self.phase = None
        self.phase_accounts = OrderedDict()
        self.packets_per_node = torch.zeros(self.n, dtype=torch.int64)

        # Observers
        self.trace = list() if trace else None
        self.watch = torch.as_tensor(watch if watch is not None else [], dtype=torch.int64)
        self._watch_columns = self.column_of[self.watch]
        if bool((self._watch_columns < 0).any()):
            raise GossipSimError(u"watched origins must be tracked")
        # end if
        self.first_informed = torch.full((self.n, self.watch.numel()), -1, dtype=torch.int64)
        self.first_informed[self.watch, torch.arange(self.watch.numel())] = 0
        self.watch_counts = [torch.ones(self.watch.numel(), dtype=torch.int64)]
        self.timeline = [(0, self.informed_fraction())] if timeline else None
        self._hooks = list()
    # end __init__

    ##############################################
    # PROPERTIES
    ##############################################

    # Steps executed
    @property
    def steps(self):
        """
        Number of begun steps
        """
        return self.step_index + 1
    # end steps

    # Alive nodes
    @property
    def alive(self):
        """
        Bool mask of non-failed nodes
        """
        return ~self.failed
    # end alive

    # Open channels
    @property
    def n_open_channels(self):
        """
        Size of the channel table of the current step
        """
        return sum(len(b) for b in self._batches)
    # end n_open_channels

    # Total channels
    @property
    def channels_opened(self):
        return self.account.channels_opened
    # end channels_opened

    # Total packets
    @property
    def packets_sent(self):
        return self.account.packets_sent
    # end packets_sent

    ##############################################
    # PUBLIC
    ##############################################

    # Register an observer of phases and steps
    def add_hook(self, hook):
        """
        Add a hook with on_phase(world, name) and on_step(world) methods
        :param hook: Hook object
        """
        self._hooks.append(hook)
    # end add_hook

    # Enter a protocol phase
    def enter_phase(self, name):
        """
        Start attributing counters to a phase; hooks are notified
        :param name: Phase name
        """
        if self.in_step:
            raise GossipSimError(u"cannot change phase inside step {}".format(self.step_index))
        # end if
        self.phase = name
        if name not in self.phase_accounts:
            self.phase_accounts[name] = StepAccount()
        # end if
        for hook in self._hooks:
            hook.on_phase(self, name)
        # end for
    # end enter_phase

    # Start a step
    def begin_step(self):
        """
        Empty the channel table and advance the step index
        """
        if self.in_step:
            raise GossipSimError(u"step {} is still open".format(self.step_index))
        # end if
        self.step_index += 1
        self.in_step = True
        self._batches = list()
        self._has_outgoing.zero_()
        self._pending = list()
        self._pending_values = list()
        for hook in self._hooks:
            hook.on_step(self)
        # end for
    # end begin_step

    # Open channels
    def open_channels(self, openers, callees, kind=ChannelKind.UNIFORM):
        """
        Open one channel per opener. Failed openers and openers without a
        target (callee -1) are skipped and not counted.
        :param openers: (k,) long tensor
        :param callees: (k,) long tensor
        :param kind: ChannelKind
        :return: ChannelBatch of the opened channels
        """
        self._check_open_step()
        openers = torch.as_tensor(openers, dtype=torch.int64).view(-1)
        callees = torch.as_tensor(callees, dtype=torch.int64).view(-1)
        keep = (callees >= 0) & ~self.failed[openers]
        openers, callees = openers[keep], callees[keep]

        # Single outgoing channel per node and step
        if bool(self._has_outgoing[openers].any()):
            raise DoubleOpen(int(openers[self._has_outgoing[openers]][0]), self.step_index)
        # end if
        unique, counts = torch.unique(openers, return_counts=True)
        if bool((counts > 1).any()):
            raise DoubleOpen(int(unique[counts > 1][0]), self.step_index)
        # end if
        self._has_outgoing[openers] = True

        batch = ChannelBatch(self.step_index, openers, callees, kind)
        self._batches.append(batch)
        self._count(channels=len(batch))
        return batch
    # end open_channels

    # Open one channel
    def open_channel(self, v, target, kind=ChannelKind.UNIFORM):
        """
        Open a channel from v to target
        :param v: Opener
        :param target: Callee
        :param kind: ChannelKind
        :return: ChannelRef, or None if v has failed
        """
        batch = self.open_channels(torch.tensor([int(v)]), torch.tensor([int(target)]), kind)
        return batch.ref(0) if len(batch) > 0 else None
    # end open_channel

    # Open channels to uniform neighbors
    def open_uniform(self, nodes, generator=None):
        """
        Every node of nodes calls a uniform neighbor
        :param nodes: (k,) long tensor
        :param generator: Stream of the calling phase
        :return: ChannelBatch
        """
        nodes = self._alive_nodes(nodes)
        return self.open_channels(nodes, self.graph.sample_neighbors(nodes, generator), ChannelKind.UNIFORM)
    # end open_uniform

    # open-avoid
    def open_avoid(self, nodes, generator=None):
        """
        Every node calls a uniform neighbor outside its memory list l_v
        :param nodes: (k,) long tensor
        :param generator: Stream of the calling phase
        :return: ChannelBatch
        """
        nodes = self._alive_nodes(nodes)
        targets = self.graph.sample_neighbors_avoiding(nodes, self.memory[nodes], generator)
        return self.open_channels(nodes, targets, ChannelKind.AVOID)
    # end open_avoid

    # Reuse stored links
    def open_addressed(self, nodes, targets):
        """
        Re-open stored links
        :param nodes: (k,) long tensor
        :param targets: (k,) long tensor
        :return: ChannelBatch
        """
        return self.open_channels(nodes, targets, ChannelKind.ADDRESSED)
    # end open_addressed

    # Send message sets
    def send(self, channels, direction, payload=None, mask=None):
        """
        Send one packet over each selected channel. A failed sender sends
        nothing; a packet to a failed receiver is counted and lost.
        :param channels: ChannelBatch or ChannelRef
        :param direction: Direction
        :param payload: None (sender's message set), a MessageSet, or (k, W) rows aligned with the batch
        :param mask: Bool tensor selecting the sending channels
        :return: Bool tensor, channels whose packet was delivered
        """
        batch, sel = self._select(channels, direction, mask)
        senders = batch.senders(direction)
        receivers = batch.receivers(direction)
        delivered = self._account_packets(batch, senders, receivers, sel)

        # Start-of-step payloads
        if payload is None:
            rows = self.msgs[senders[delivered]]
        elif isinstance(payload, MessageSet):
            rows = payload.row.view(1, -1).expand(int(delivered.sum()), -1)
        else:
            rows = payload[delivered]
        # end if
        self._pending.append((receivers[delivered], rows))
        return self._project(channels, delivered)
    # end send

    # Send values of the minimum lane
    def send_values(self, channels, direction, values=None, mask=None):
        """
        Send one packet carrying an integer per channel (e.g. a leader ID),
        receivers keep the minimum
        :param channels: ChannelBatch or ChannelRef
        :param direction: Direction
        :param values: (k,) long tensor, default: senders' current values
        :param mask: Bool tensor selecting the sending channels
        :return: Bool tensor, channels whose packet was delivered
        """
        batch, sel = self._select(channels, direction, mask)
        senders = batch.senders(direction)
        receivers = batch.receivers(direction)
        if values is None:
            values = self.values[senders]
        # end if
        delivered = self._account_packets(batch, senders, receivers, sel)
        self._pending_values.append((receivers[delivered], values[delivered]))
        return self._project(channels, delivered)
    # end send_values

    # Close the step
    def end_step(self):
        """
        Merge the packets of the step into the receivers' sets and close all channels
        """
        if not self.in_step:
            raise GossipSimError(u"no open step")
        # end if

        # Union of incoming payloads
        if len(self._pending) > 0:
            receivers = torch.cat([r for r, _ in self._pending])
            rows = torch.cat([p for _, p in self._pending])
            keep = ~self.failed[receivers]
            if bool(keep.any()):
                bitsets.scatter_or_(self.msgs, receivers[keep], rows[keep])
            # end if
        # end if

        # Minimum lane
        if len(self._pending_values) > 0:
            receivers = torch.cat([r for r, _ in self._pending_values])
            values = torch.cat([v for _, v in self._pending_values])
            keep = ~self.failed[receivers]
            self.values.scatter_reduce_(0, receivers[keep], values[keep], reduce='amin', include_self=True)
        # end if

        # Observers
        if self.watch.numel() > 0:
            informed = bitsets.test_bits(self.msgs, self._watch_columns)
            newly = informed & (self.first_informed < 0)
            self.first_informed[newly] = self.steps
            self.watch_counts.append(informed.sum(dim=0))
        # end if
        if self.timeline is not None:
            self.timeline.append((self.steps, self.informed_fraction()))
        # end if
        if self.trace is not None:
            self._trace_step()
        # end if

        self.account.steps += 1
        if self.phase is not None:
            self.phase_accounts[self.phase].steps += 1
        # end if
        self._batches = list()
        self._pending = list()
        self._pending_values = list()
        self.in_step = False
    # end end_step

    # Fail nodes
    def fail(self, victims):
        """
        Mark nodes as failed. From now on they neither send, open nor store.
        :param victims: Iterable or tensor of nodes
        """
        victims = torch.as_tensor(victims, dtype=torch.int64).view(-1)
        newly = victims[~self.failed[victims]]
        self.failed[newly] = True
        self.failed_at[newly] = max(self.step_index, 0)
        logger.debug(u"{} nodes failed at step {}".format(newly.numel(), self.step_index))
    # end fail

    # Gossiping done?
    def is_complete(self):
        """
        Every alive node holds every tracked origin of an alive node
        :return: False when no node is alive
        """
        alive = ~self.failed
        if not bool(alive.any()):
            return False
        # end if
        required = self.required_row()
        rows = self.msgs[alive]
        return bool(((rows & required) == required).all())
    # end is_complete

    # Alive tracked origins
    def required_row(self):
        """
        Bit row of the tracked origins of alive nodes
        """
        columns = (~self.failed[self.origins]).nonzero().view(-1)
        return bitsets.columns_mask(columns, self.k)
    # end required_row

    # Nodes holding an origin
    def holds(self, origin, nodes=None):
        """
        Which nodes hold origin
        :param origin: Tracked origin
        :param nodes: Nodes to test (default: all)
        :return: Bool tensor
        """
        column = self.column_of[int(origin)]
        if int(column) < 0:
            raise GossipSimError(u"origin {} is not tracked".format(origin))
        # end if
        rows = self.msgs if nodes is None else self.msgs[nodes]
        return bitsets.test_bits(rows, column.view(1))[:, 0]
    # end holds

    # Message set of v
    def message_set(self, v):
        """
        Copy of m_v
        """
        return MessageSet(self.msgs[v].clone(), self.origins)
    # end message_set

    # Union of several message sets
    def union_of(self, nodes):
        """
        Union of the message sets of nodes
        """
        row = torch.zeros(self.msgs.size(1), dtype=torch.int64)
        for v in torch.as_tensor(nodes, dtype=torch.int64).view(-1).tolist():
            row |= self.msgs[v]
        # end for
        return MessageSet(row, self.origins)
    # end union_of

    # Replace a message set
    def set_message_set(self, v, message_set):
        """
        Overwrite m_v between steps (used to seed a broadcast)
        """
        if self.in_step:
            raise GossipSimError(u"cannot overwrite a message set inside a step")
        # end if
        self.msgs[v] = message_set.row
    # end set_message_set

    # Node view
    def node_state(self, v):
        """
        NodeState of v
        """
        return NodeState(self, v)
    # end node_state

    # Informed (node, origin) pairs
    def informed_fraction(self):
        """
        Fraction of (node, tracked origin) pairs already delivered
        """
        return float(bitsets.popcount(self.msgs).sum().item()) / float(self.n * self.k)
    # end informed_fraction

    # Phase counters
    def phase_breakdown(self):
        """
        Counters per phase, in phase order
        """
        return OrderedDict((name, account.copy()) for name, account in self.phase_accounts.items())
    # end phase_breakdown

    # Store an entry of l_v
    def remember(self, nodes, slots, contacts, tags, kind):
        """
        Write l_v[slot] = (contact, tag) for each node
        :param nodes: (k,) long tensor
        :param slots: (k,) long tensor or integer
        :param contacts: (k,) long tensor
        :param tags: (k,) long tensor or integer
        :param kind: Slot kind
        """
        nodes = torch.as_tensor(nodes, dtype=torch.int64)
        keep = ~self.failed[nodes]
        nodes = nodes[keep]
        slots = self._broadcast(slots, keep)
        self.memory[nodes, slots] = self._broadcast(contacts, keep)
        self.memory_tags[nodes, slots] = self._broadcast(tags, keep)
        self.memory_kinds[nodes, slots] = kind
    # end remember

    ##############################################
    # PRIVATE
    ##############################################

    # Channels may be opened
    def _check_open_step(self):
        """
        Raise outside a step
        """
        if not self.in_step:
            raise ClosedChannel(u"channels can only be opened inside a step")
        # end if
    # end _check_open_step

    # Alive subset
    def _alive_nodes(self, nodes):
        """
        Drop failed nodes
        """
        nodes = torch.as_tensor(nodes, dtype=torch.int64).view(-1)
        return nodes[~self.failed[nodes]]
    # end _alive_nodes

    # Batch and selection of a send
    def _select(self, channels, direction, mask):
        """
        Resolve a ChannelBatch or ChannelRef and the sending mask
        """
        Direction(direction)
        batch = channels.batch if not isinstance(channels, ChannelBatch) else channels
        if not self.in_step or batch.step != self.step_index:
            raise ClosedChannel(u"channel of step {} used in step {}".format(batch.step, self.step_index))
        # end if
        sel = torch.zeros(len(batch), dtype=torch.bool)
        positions = self._positions(channels, batch)
        sel[positions] = True if mask is None else torch.as_tensor(mask, dtype=torch.bool).view(-1)
        return batch, sel
    # end _select

    # Positions of a handle in its batch
    def _positions(self, channels, batch):
        if isinstance(channels, ChannelBatch):
            return torch.arange(len(batch))
        # end if
        return torch.tensor([channels.index])
    # end _positions

    # Result aligned with the handle
    def _project(self, channels, delivered):
        return delivered if isinstance(channels, ChannelBatch) else delivered[channels.index].view(1)
    # end _project

    # Count packets
    def _account_packets(self, batch, senders, receivers, sel):
        """
        Drop sends of failed senders, count the others
        :return: Delivered mask over the batch
        """
        sending = sel & ~self.failed[senders]
        k = int(sending.sum())
        self._count(packets=k)
        self.packets_per_node.index_add_(0, senders[sending], torch.ones(k, dtype=torch.int64))
        batch.packets[sending] += 1
        return sending & ~self.failed[receivers]
    # end _account_packets

    # Add to the counters
    def _count(self, channels=0, packets=0):
        self.account.channels_opened += channels
        self.account.packets_sent += packets
        if self.phase is not None:
            self.phase_accounts[self.phase].channels_opened += channels
            self.phase_accounts[self.phase].packets_sent += packets
        # end if
    # end _count

    # Scalar or aligned tensor
    def _broadcast(self, x, keep):
        if torch.is_tensor(x):
            return x[keep]
        # end if
        return torch.full((int(keep.sum()),), int(x), dtype=torch.int64)
    # end _broadcast

    # Trace records of the step
    def _trace_step(self):
        for batch in self._batches:
            for o, c, p in zip(batch.openers.tolist(), batch.callees.tolist(), batch.packets.tolist()):
                self.trace.append((self.step_index, o, c, batch.kind.value, p))
            # end for
        # end for
    # end _trace_step

    ##############################################
    # OVERRIDE
    ##############################################

    # Representation
    def __repr__(self):
        return u"World(n={}, tracked={}, step={}, {})".format(self.n, self.k, self.step_index, self.account)
    # end __repr__

# end World
