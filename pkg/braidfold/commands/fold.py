"""Fold a quiver with admissible automorphism to its Cartan datum."""

from braidfold.command_line import AbstractCLI, add_global_args, \
    validate_global_args
from braidfold.data.serialize import read_quiver
from braidfold.quiver.quiver import fold_report

import argparse
import logging


class CLI(AbstractCLI):
    """CLI implements AbstractCLI from the braidfold package."""

    def __init__(self):
        self.name = 'fold'
        self.args = None

    def get_name(self) -> str:
        return self.name

    def add_subparser_args(self, subparsers: argparse) -> argparse:
        subparser = subparsers.add_parser(self.name,
                                          description="Fold a quiver with "
                                                      "admissible automorphism.",
                                          help="Compute the symmetrizable Cartan "
                                               "datum of a quiver with admissible "
                                               "automorphism, with its orbit "
                                               "tables.")
        add_global_args(subparser)
        return subparsers

    def validate_args(self, args):
        validate_global_args(args, quiver_only=True)
        self.args = args
        return args

    def run(self, args):
        qa = read_quiver(args.quiver)
        report = fold_report(qa)
        logging.info(f"{len(report['orbits'])} orbits, "
                     f"eps = {report['datum']['eps']}")
        return report
