"""Unfold a symmetrizable Cartan datum to a quiver with automorphism."""

from braidfold.command_line import AbstractCLI, add_global_args, \
    validate_global_args
from braidfold.data.serialize import read_datum
from braidfold.quiver.quiver import fold, unfold

import argparse
import logging


class CLI(AbstractCLI):
    """CLI implements AbstractCLI from the braidfold package."""

    def __init__(self):
        self.name = 'unfold'
        self.args = None

    def get_name(self) -> str:
        return self.name

    def add_subparser_args(self, subparsers: argparse) -> argparse:
        subparser = subparsers.add_parser(self.name,
                                          description="Unfold a Cartan datum.",
                                          help="Build a quiver with admissible "
                                               "automorphism whose folding is "
                                               "the given Cartan datum.")
        add_global_args(subparser)
        subparser.add_argument("--orient", nargs="+", type=str, default=[],
                               dest="orientation",
                               help="Orientations TAIL:HEAD of linked orbit "
                                    "pairs.  Unlisted pairs point from the "
                                    "lower index to the higher one.")
        return subparsers

    def validate_args(self, args):
        validate_global_args(args, datum_only=True)
        pairs = []
        for entry in args.orientation:
            parts = entry.split(":")
            assert len(parts) == 2 and all(p.strip().lstrip("-").isdigit()
                                           for p in parts), \
                f"Orientation '{entry}' must look like TAIL:HEAD."
            pairs.append((int(parts[0]), int(parts[1])))
        args.orientation = pairs
        self.args = args
        return args

    def run(self, args):
        C = read_datum(args.datum)
        qa = unfold(C, args.orientation)
        folded, _ = fold(qa)
        assert folded == C, "Unfolding does not fold back to the input datum."
        logging.info(f"{qa.quiver.n_vertices} vertices, {qa.quiver.n_arrows} "
                     f"arrows, automorphism of order {qa.order}")
        return qa.to_json()
