# -*- coding: utf-8 -*-
#
# File : gossipsim/utils/bitsets.py
# Description : Packed bit-set rows stored in int64 tensors.
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
import torch


# Bits per word
WORD_BITS = 64

# Single-bit masks, bit 63 is the sign bit of int64
BIT_MASKS = torch.tensor([(1 << i) if i < 63 else -(1 << 63) for i in range(WORD_BITS)], dtype=torch.int64)

# Number of set bits of every byte value
POPCOUNT8 = torch.tensor([bin(i).count('1') for i in range(256)], dtype=torch.int64)


# Number of words needed for k bits
def n_words(k):
    """
    Number of int64 words needed to store k bits
    :param k: Number of bits
    :return: Number of words (at least 1)
    """
    return max(1, (int(k) + WORD_BITS - 1) // WORD_BITS)
# end n_words


# Empty rows
def empty_rows(n_rows, k):
    """
    Zeroed bit rows
    :param n_rows: Number of rows
    :param k: Number of bits per row
    :return: (n_rows, n_words(k)) int64 tensor
    """
    return torch.zeros(n_rows, n_words(k), dtype=torch.int64)
# end empty_rows


# Word index and mask of columns
def locate(columns):
    """
    Word index and single-bit mask of each column
    :param columns: Long tensor of bit columns
    :return: (words, masks) long tensors
    """
    columns = torch.as_tensor(columns, dtype=torch.int64)
    return columns // WORD_BITS, BIT_MASKS[columns % WORD_BITS]
# end locate


# Mask row with a set of columns
def columns_mask(columns, k):
    """
    One row with the given columns set
    :param columns: Iterable of columns
    :param k: Number of bits of the row
    :return: (n_words(k),) int64 tensor
    """
    row = torch.zeros(n_words(k), dtype=torch.int64)
    if not torch.is_tensor(columns):
        columns = torch.tensor(sorted(columns), dtype=torch.int64)
    # end if
    if columns.numel() > 0:
        words, masks = locate(columns)
        scatter_or_(row, words, masks)
    # end if
    return row
# end columns_mask


# Set one bit per row
def set_bits_(rows, row_index, columns):
    """
    In-place: rows[row_index[i]] gets bit columns[i]
    :param rows: (m, W) int64 tensor
    :param row_index: Long tensor of rows
    :param columns: Long tensor of columns, same length
    """
    row_index = torch.as_tensor(row_index, dtype=torch.int64)
    if row_index.numel() == 0:
        return
    # end if
    words, masks = locate(columns)
    flat = rows.view(-1)
    scatter_or_(flat, row_index * rows.size(1) + words, masks)
# end set_bits_


# Test columns in every row
def test_bits(rows, columns):
    """
    Membership of columns in rows
    :param rows: (m, W) int64 tensor
    :param columns: Long tensor of c columns
    :return: (m, c) bool tensor
    """
    words, masks = locate(columns)
    return (rows[:, words] & masks) != 0
# end test_bits


# Count set bits per row
def popcount(rows):
    """
    Number of set bits in each row
    :param rows: (m, W) or (W,) int64 tensor
    :return: (m,) or scalar int64 tensor
    """
    as_bytes = rows.contiguous().view(torch.uint8).to(torch.int64)
    return POPCOUNT8[as_bytes].sum(dim=-1)
# end popcount


# Columns set in a row
def unpack(row, k):
    """
    List the columns set in one row
    :param row: (W,) int64 tensor
    :param k: Number of valid bits
    :return: Sorted list of columns
    """
    if k == 0:
        return []
    # end if
    columns = torch.arange(k, dtype=torch.int64)
    present = test_bits(row.view(1, -1), columns)[0]
    return columns[present].tolist()
# end unpack


# OR-reduce src rows into dst at index, duplicates allowed
def scatter_or_(dst, index, src):
    """
    In-place dst[index[i]] |= src[i], with repeated indices OR-combined.
    Rows are applied in layers of unique targets (rank of each entry among
    entries with the same target), so the cost is O(k * max multiplicity).
    :param dst: (m, ...) int64 tensor
    :param index: (k,) long tensor
    :param src: (k, ...) int64 tensor
    """
    index = torch.as_tensor(index, dtype=torch.int64)
    k = index.numel()
    if k == 0:
        return dst
    # end if

    # Group equal targets
    order = torch.argsort(index, stable=True)
    sorted_index = index[order]
    positions = torch.arange(k, dtype=torch.int64)
    starts = torch.ones(k, dtype=torch.bool)
    starts[1:] = sorted_index[1:] != sorted_index[:-1]
    group_start = torch.cummax(torch.where(starts, positions, torch.zeros_like(positions)), dim=0)[0]
    rank = positions - group_start

    # One layer per rank
    for r in range(int(rank.max().item()) + 1):
        layer = rank == r
        targets = sorted_index[layer]
        dst[targets] = dst[targets] | src[order[layer]]
    # end for

    return dst
# end scatter_or_
