"""Check the K-group square for a rank-2 pair of orbits."""

from braidfold.command_line import AbstractCLI, add_global_args, \
    validate_global_args, load_inputs, EXIT_OK, EXIT_VERIFICATION_FAILED
from braidfold.kgroup.kgroup import KContext, square_sweep

import argparse
import logging


class CLI(AbstractCLI):
    """CLI implements AbstractCLI from the braidfold package."""

    def __init__(self):
        self.name = 'ksquare'
        self.args = None

    def get_name(self) -> str:
        return self.name

    def add_subparser_args(self, subparsers: argparse) -> argparse:
        subparser = subparsers.add_parser(self.name,
                                          description="K-group square.",
                                          help="Compare T_i(lambda(x)) with "
                                               "lambda(omega(x)) for every "
                                               "constant-sheaf class of the "
                                               "orbit pair (i, j).")
        add_global_args(subparser)
        subparser.add_argument("--orbit", type=int, action="append",
                               default=[], dest="orbits",
                               help="Give twice: the reflected orbit i, then j.")
        return subparsers

    def validate_args(self, args):
        validate_global_args(args)
        assert len(args.orbits) == 2, "Specify --orbit exactly twice (i, then j)."
        self.args = args
        return args

    def run(self, args):
        C, qa = load_inputs(args)
        i, j = args.orbits
        if qa is not None:
            context = KContext.from_quiver(qa, i, j)
        else:
            context = KContext(datum=C, i=i, j=j)
        logging.info(f"Context ({i}, {j}) with N = {context.N}")
        return {"context": context.to_json(),
                "squares": square_sweep(context, args.max_height)}

    def exit_code(self, report) -> int:
        if all(s["equal"] for s in report["squares"].values()):
            return EXIT_OK
        return EXIT_VERIFICATION_FAILED
