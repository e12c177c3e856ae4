# -*- coding: utf-8 -*-
#
# File : gossipsim/cli/ExperimentDataset.py
# Description : Sweep cells as a dataset.
# Date : 19th of March, 2025
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
from torch.utils.data.dataset import Dataset
from .cell import Cell, run_cell


# Sweep dataset
class ExperimentDataset(Dataset):
    """
    One item per sweep cell, in the order algorithm, n, F, repetition.
    Getting an item runs the cell.
    """

    # Constructor
    def __init__(self, config, trace=False):
        """
        Constructor
        :param config: ExperimentConfig
        :param trace: Keep the channel trace of every run
        """
        self.config = config
        self.trace = trace
        self.cells = list()
        for algorithm in config.algorithms:
            for n in config.n_sweep:
                for f in config.F_sweep:
                    for repetition in range(config.repetitions):
                        self.cells.append(Cell(len(self.cells), algorithm, n, f, repetition))
                    # end for
                # end for
            # end for
        # end for
    # end __init__

    #############################################
    # OVERRIDE
    #############################################

    # Length
    def __len__(self):
        """
        Number of cells
        """
        return len(self.cells)
    # end __len__

    # Get item
    def __getitem__(self, idx):
        """
        Run a cell
        :param idx: Cell index
        :return: CellResult
        """
        return run_cell(self.config, self.cells[idx], trace=self.trace)
    # end __getitem__

# end ExperimentDataset
