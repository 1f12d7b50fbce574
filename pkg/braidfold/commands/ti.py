"""Apply Lusztig's symmetry T_i or its inverse."""

from braidfold.command_line import AbstractCLI, add_global_args, \
    validate_global_args, load_inputs
from braidfold.algebra.braid import apply_symmetry
from braidfold.data.serialize import read_element

import argparse
import logging
import os


class CLI(AbstractCLI):
    """CLI implements AbstractCLI from the braidfold package."""

    def __init__(self):
        self.name = 'ti'
        self.args = None

    def get_name(self) -> str:
        return self.name

    def add_subparser_args(self, subparsers: argparse) -> argparse:
        subparser = subparsers.add_parser(self.name,
                                          description="Apply T_i.",
                                          help="Apply T_i to an element of _if "
                                               "(or T_i^-1 to an element of "
                                               "^if) and report the solve "
                                               "certificate.")
        add_global_args(subparser)
        subparser.add_argument("--i", type=int, required=True, dest="i",
                               help="Index of the symmetry.")
        subparser.add_argument("--element", type=str, required=True,
                               dest="element",
                               help="Element JSON file.")
        subparser.add_argument("--inverse", dest="inverse", action="store_true",
                               help="Including the flag --inverse applies "
                                    "T_i^-1 instead.")
        return subparsers

    def validate_args(self, args):
        validate_global_args(args)
        args.element = os.path.expanduser(args.element)
        self.args = args
        return args

    def run(self, args):
        C, _ = load_inputs(args)
        x = read_element(args.element, C)
        result = apply_symmetry(args.i, x, inverse=args.inverse,
                                max_height=args.max_height)
        logging.info(f"Solved over {len(result.products)} generator products.")
        return {"image": result.image.to_json(),
                "certificate": result.certificate_json()}
