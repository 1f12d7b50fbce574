"""Command-line tool functionality.

Parses arguments to the point of making a decision about which tool should be
called.  That tool will use its own tool-specific argument parser.

"""

from braidfold.algebra.cartan import CartanDatum
from braidfold.algebra.falg import DEFAULT_MAX_HEIGHT
from braidfold.data.serialize import read_datum, read_quiver, write_report
from braidfold.exceptions import BraidfoldError, InvalidInputError, \
    ResourceLimit, VerificationFailure
from braidfold.quiver.quiver import QuiverAut, fold

import sys
import argparse
from abc import ABC, abstractmethod
import importlib
import logging
import os
from typing import List, Tuple, Union


# New tools should be added to this list.
TOOL_LIST = ['fold', 'unfold', 'dims', 'pair', 'project', 'ti', 'ksquare',
             'verify']

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INVALID_INPUT = 2
EXIT_RESOURCE_LIMIT = 3


class AbstractCLI(ABC):
    """Abstract class for braidfold command-line interface tools.

    Note:
        Tools are called from the command line using
        $ braidfold TOOL_NAME --optional_arg1 optional_arg1 ...

    """

    @abstractmethod
    def get_name(self) -> str:
        """Return the command-line name of the tool."""
        pass

    @abstractmethod
    def add_subparser_args(self, parser: argparse) -> argparse:
        """Add tool-specific arguments, returning a parser."""
        pass

    @abstractmethod
    def validate_args(self, parser: argparse):
        """Do tool-specific argument validation, returning args."""
        pass

    @abstractmethod
    def run(self, args):
        """Run the tool using the parsed arguments, returning a JSON report."""
        pass

    def exit_code(self, report) -> int:
        """Exit code for a successfully produced report."""
        return EXIT_OK


def add_global_args(subparser: argparse.ArgumentParser):
    """Flags shared by every tool."""
    subparser.add_argument("--datum", type=str, default=None, dest="datum",
                           help="Cartan datum JSON file, "
                                "{\"A\": [[...]], \"eps\": [...]}.")
    subparser.add_argument("--quiver", type=str, default=None, dest="quiver",
                           help="Quiver with automorphism JSON file, "
                                "{\"vertices\": n, \"arrows\": [[s, t], ...], "
                                "\"vperm\": [...], \"aperm\": [...]}.")
    subparser.add_argument("--max-height", type=int, default=DEFAULT_MAX_HEIGHT,
                           dest="max_height",
                           help="Largest weight height any computation may use.")
    subparser.add_argument("--output", type=str, default="-", dest="output",
                           help="Report file; '-' writes to standard output.")
    subparser.add_argument("--debug", dest="debug", action="store_true",
                           help="Including the flag --debug logs every "
                                "weight space and solve.")


def validate_global_args(args, need_datum: bool = True,
                         datum_only: bool = False,
                         quiver_only: bool = False):
    """Checks shared by every tool.

    Args:
        args: Parsed arguments.
        need_datum: Exactly one of --datum and --quiver must be given.
        datum_only: Only --datum is accepted.
        quiver_only: Only --quiver is accepted.

    """
    assert args.max_height >= 1, "--max-height must be at least 1."
    if args.output != "-":
        args.output = os.path.expanduser(args.output)
        file_dir, _ = os.path.split(args.output)
        if file_dir:
            assert os.access(file_dir, os.W_OK), \
                f"Cannot write to specified output directory {file_dir}"
    if args.datum is not None:
        args.datum = os.path.expanduser(args.datum)
    if args.quiver is not None:
        args.quiver = os.path.expanduser(args.quiver)

    if datum_only:
        assert args.datum is not None and args.quiver is None, \
            "Specify a Cartan datum with --datum (and no --quiver)."
    elif quiver_only:
        assert args.quiver is not None and args.datum is None, \
            "Specify a quiver with --quiver (and no --datum)."
    elif need_datum:
        assert (args.datum is None) != (args.quiver is None), \
            "Specify exactly one of --datum and --quiver."


def load_inputs(args) -> Tuple[CartanDatum, Union[QuiverAut, None]]:
    """The datum, folded from the quiver when --quiver is given."""
    if args.quiver is not None:
        qa = read_quiver(args.quiver)
        datum, _ = fold(qa)
        logging.info(f"Folded quiver to {datum}")
        return datum, qa
    return read_datum(args.datum), None


def setup_logging(tool: str, output: str = "-", debug: bool = False):
    """Log to standard error, and to <output>.log when writing to a file."""
    fmt = f"braidfold:{tool}: %(message)s"
    level = logging.DEBUG if debug else logging.INFO
    if output is not None and output != "-":
        file_dir, file_base = os.path.split(output)
        file_name = os.path.splitext(os.path.basename(file_base))[0]
        log_file = os.path.join(file_dir, file_name + ".log")
        logging.basicConfig(level=level, format=fmt, filename=log_file,
                            filemode="w", force=True)
        console = logging.StreamHandler(sys.stderr)
        console.setFormatter(logging.Formatter(fmt))  # Same format for stderr.
        logging.getLogger('').addHandler(console)
    else:
        logging.basicConfig(level=level, format=fmt, stream=sys.stderr,
                            force=True)


def _error_report(e: Exception):
    return {"error": type(e).__name__, "message": str(e)}


def main(argv: Union[List[str], None] = None) -> int:
    """Parse command-line arguments and run specified tool.

    Args:
        argv: Arguments after the program name; sys.argv[1:] when None.

    Returns:
        Exit code: 0 success, 1 verification failure, 2 invalid input,
        3 resource limit.

    """

    # Set up argument parser.
    parser = argparse.ArgumentParser(prog="braidfold",
                                     description="braidfold command-line tools "
                                                 "for Lusztig symmetries, "
                                                 "folding and quantum Serre "
                                                 "relations.")

    # Declare the existence of sub-parsers.
    subparsers = parser.add_subparsers(title="sub-commands",
                                       description="valid braidfold commands",
                                       dest="tool")

    # Add the tool-specific arguments using sub-parsers.
    cli = {}
    for tool in TOOL_LIST:

        # Each tool lives in braidfold/commands/<tool>.py, in a class named
        # CLI which implements AbstractCLI.
        module = importlib.import_module('.'.join(["braidfold", "commands", tool]))
        cli[tool] = module.CLI()
        subparsers = cli[tool].add_subparser_args(subparsers)

    # Parse arguments.
    args = parser.parse_args(sys.argv[1:] if argv is None else argv)

    if args.tool is None:
        parser.print_help(sys.stderr)
        return EXIT_INVALID_INPUT

    output = getattr(args, "output", "-")
    setup_logging(args.tool, output, getattr(args, "debug", False))

    try:
        # Validate arguments.
        try:
            args = cli[args.tool].validate_args(args)
        except AssertionError as e:
            raise InvalidInputError(str(e))

        # Run the tool.
        report = cli[args.tool].run(args)

    except InvalidInputError as e:
        logging.error(f"{type(e).__name__}: {e}")
        write_report(_error_report(e), output)
        return EXIT_INVALID_INPUT
    except ResourceLimit as e:
        logging.error(f"ResourceLimit: {e}")
        write_report(_error_report(e), output)
        return EXIT_RESOURCE_LIMIT
    except VerificationFailure as e:
        logging.error(f"Verification failed: {e}")
        write_report({"error": "VerificationFailure", "check": e.check,
                      "witness": e.witness}, output)
        return EXIT_VERIFICATION_FAILED
    except BraidfoldError as e:
        logging.error(f"{type(e).__name__}: {e}")
        write_report(_error_report(e), output)
        return EXIT_INVALID_INPUT

    write_report(report, output)
    return cli[args.tool].exit_code(report)
