# -*- coding: utf-8 -*-
#
# File : gossipsim/cli/main.py
# Description : Command line entry point.
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
import argparse
import logging
import sys
from gossipsim.utils.exceptions import ConfigError, ResourceGuardError
from .experiment import run_experiment, validate_config

# Logger
logger = logging.getLogger(__name__)

# Log line format
LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'


# Argument parser
def build_parser():
    """
    Parser of the gossipsim command
    :return: ArgumentParser
    """
    parser = argparse.ArgumentParser(
        prog='gossipsim',
        description="Simulator of gossiping protocols in the random phone call model"
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Enable debug logging")
    parser.add_argument("-q", "--quiet", action="store_true", help="Only log warnings and errors")
    commands = parser.add_subparsers(dest='command', required=True)

    # run
    run = commands.add_parser('run', help="Run a sweep")
    run.add_argument("config", help="Path to the TOML configuration file")
    run.add_argument("--jobs", type=int, default=0, help="Worker processes (default: 0, run in this process)")
    run.add_argument("--out", default="results", help="Output directory (default: results)")
    run.add_argument("--emit-plotdata", action="store_true", help="Write the plot CSV files")
    run.add_argument("--trace", action="store_true", help="Write one channel trace per run")
    run.add_argument("--no-progress", action="store_true", help="Disable the progress bar")

    # validate
    validate = commands.add_parser('validate', help="Check a configuration and print it fully resolved")
    validate.add_argument("config", help="Path to the TOML configuration file")
    return parser
# end build_parser


# Entry point
def main(argv=None):
    """
    gossipsim run|validate
    :param argv: Arguments (default: sys.argv)
    :return: Exit status: 2 for configuration errors, 1 if a cell raised, 0 otherwise
    """
    args = build_parser().parse_args(argv)

    # Logging
    if args.quiet:
        level = logging.WARNING
    elif args.verbose:
        level = logging.DEBUG
    else:
        level = logging.INFO
    # end if
    logging.basicConfig(level=level, format=LOG_FORMAT)

    try:
        config = validate_config(args.config)
    except (ConfigError, ResourceGuardError) as e:
        sys.stderr.write(u"{}\n".format(e))
        return 2
    # end try

    if args.command == 'validate':
        sys.stdout.write(config.describe())
        sys.stdout.write(u"\n")
        return 0
    # end if

    if args.jobs < 0:
        sys.stderr.write(u"--jobs must be non-negative\n")
        return 2
    # end if
    results = run_experiment(
        config,
        args.out,
        jobs=args.jobs,
        emit_plotdata=args.emit_plotdata,
        trace=args.trace,
        progress=not args.no_progress
    )
    return 0 if all(r.ok for r in results) else 1
# end main
