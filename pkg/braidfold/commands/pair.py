"""Evaluate the bilinear form on two elements."""

from braidfold.command_line import AbstractCLI, add_global_args, \
    validate_global_args, load_inputs
from braidfold.algebra.falg import check_height
from braidfold.algebra.freealg import pair
from braidfold.data.serialize import read_element

import argparse
import os


class CLI(AbstractCLI):
    """CLI implements AbstractCLI from the braidfold package."""

    def __init__(self):
        self.name = 'pair'
        self.args = None

    def get_name(self) -> str:
        return self.name

    def add_subparser_args(self, subparsers: argparse) -> argparse:
        subparser = subparsers.add_parser(self.name,
                                          description="Evaluate (x, y).",
                                          help="Compute the bilinear form of "
                                               "two elements of the free "
                                               "algebra exactly.")
        add_global_args(subparser)
        subparser.add_argument("--x", type=str, required=True, dest="x",
                               help="Element JSON file.")
        subparser.add_argument("--y", type=str, required=True, dest="y",
                               help="Element JSON file.")
        return subparsers

    def validate_args(self, args):
        validate_global_args(args)
        args.x = os.path.expanduser(args.x)
        args.y = os.path.expanduser(args.y)
        self.args = args
        return args

    def run(self, args):
        C, _ = load_inputs(args)
        x = read_element(args.x, C)
        y = read_element(args.y, C)
        for part in list(x.weight_components()) + list(y.weight_components()):
            check_height(part, args.max_height)
        return {"value": pair(x, y).to_json()}
