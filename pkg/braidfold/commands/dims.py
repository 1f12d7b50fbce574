"""Table of weight-space dimensions of f."""

from braidfold.command_line import AbstractCLI, add_global_args, \
    validate_global_args, load_inputs
from braidfold.algebra.cartan import weights_of_height
from braidfold.algebra.falg import weight_space

import argparse
import logging


class CLI(AbstractCLI):
    """CLI implements AbstractCLI from the braidfold package."""

    def __init__(self):
        self.name = 'dims'
        self.args = None

    def get_name(self) -> str:
        return self.name

    def add_subparser_args(self, subparsers: argparse) -> argparse:
        subparser = subparsers.add_parser(self.name,
                                          description="Weight-space dimensions.",
                                          help="List every weight up to the "
                                               "height bound with its word "
                                               "count and the dimension of f "
                                               "in that weight.")
        add_global_args(subparser)
        subparser.add_argument("--height", type=int, default=None,
                               dest="height",
                               help="Largest height listed (defaults to "
                                    "--max-height).")
        return subparsers

    def validate_args(self, args):
        validate_global_args(args)
        if args.height is None:
            args.height = args.max_height
        assert args.height >= 0, "--height must be nonnegative."
        self.args = args
        return args

    def run(self, args):
        C, _ = load_inputs(args)
        table = []
        for h in range(args.height + 1):
            for nu in weights_of_height(C, h):
                ws = weight_space(C, nu, args.max_height)
                table.append({"weight": list(nu), "words": len(ws.words),
                              "dim": ws.rank})
            logging.info(f"Height {h} done.")
        return {"datum": C.to_json(), "weights": table}
