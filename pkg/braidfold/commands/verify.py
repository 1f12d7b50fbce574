"""Run the bundled verification suites."""

from braidfold.command_line import AbstractCLI, add_global_args, \
    validate_global_args, load_inputs, EXIT_OK, EXIT_VERIFICATION_FAILED
from braidfold.verify import SUITES, run_suites

import argparse


class CLI(AbstractCLI):
    """CLI implements AbstractCLI from the braidfold package."""

    def __init__(self):
        self.name = 'verify'
        self.args = None

    def get_name(self) -> str:
        return self.name

    def add_subparser_args(self, subparsers: argparse) -> argparse:
        subparser = subparsers.add_parser(self.name,
                                          description="Verification suites.",
                                          help="Check the Serre relations, "
                                               "projections, Lusztig "
                                               "symmetries and the K-group "
                                               "square on a datum or quiver.")
        add_global_args(subparser)
        subparser.add_argument("--suite", type=str, default="all",
                               choices=SUITES + ["all"], dest="suite",
                               help="Which suite to run.")
        subparser.add_argument("--seed", type=int, default=0, dest="seed",
                               help="Seed of the random samples.")
        subparser.add_argument("--timings", action="store_true", default=False,
                               dest="timings",
                               help="Add the wall-clock seconds of every "
                                    "check to the report.  Reports are then "
                                    "no longer reproducible byte for byte.")
        return subparsers

    def validate_args(self, args):
        validate_global_args(args)
        assert args.seed >= 0, "--seed must be nonnegative."
        self.args = args
        return args

    def run(self, args):
        C, qa = load_inputs(args)
        return run_suites(C, suite=args.suite, qa=qa, seed=args.seed,
                          max_height=args.max_height, timings=args.timings)

    def exit_code(self, report) -> int:
        return EXIT_OK if report["passed"] else EXIT_VERIFICATION_FAILED
