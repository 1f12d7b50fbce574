"""Orthogonal projection onto _if or ^if."""

from braidfold.command_line import AbstractCLI, add_global_args, \
    validate_global_args, load_inputs
from braidfold.algebra.falg import decompose_left, decompose_right
from braidfold.data.serialize import read_element
from braidfold.quiver.quiver import unfolded_datum, orbit_vertex_set

import argparse
import os


class CLI(AbstractCLI):
    """CLI implements AbstractCLI from the braidfold package."""

    def __init__(self):
        self.name = 'project'
        self.args = None

    def get_name(self) -> str:
        return self.name

    def add_subparser_args(self, subparsers: argparse) -> argparse:
        subparser = subparsers.add_parser(self.name,
                                          description="Project an element.",
                                          help="Split a homogeneous element "
                                               "into its component in _if "
                                               "(or ^if) and the complement.")
        add_global_args(subparser)
        subparser.add_argument("--element", type=str, required=True,
                               dest="element",
                               help="Element JSON file.")
        subparser.add_argument("--orbit-set", nargs="+", type=int,
                               required=True, dest="index_set",
                               help="Indices to project along.  With "
                                    "--quiver these are orbits: indices of "
                                    "the folded datum, or with --unfolded "
                                    "the vertex sets of those orbits.")
        subparser.add_argument("--side", type=str, default="left",
                               choices=["left", "right"], dest="side",
                               help="'left' projects onto _if, 'right' "
                                    "onto ^if.")
        subparser.add_argument("--unfolded", action="store_true",
                               default=False, dest="unfolded",
                               help="Work in the algebra of the quiver "
                                    "itself (one letter per vertex) and "
                                    "project along the vertices of the "
                                    "chosen orbits.  Needs --quiver; "
                                    "without it the element is read over "
                                    "the folded datum.")
        return subparsers

    def validate_args(self, args):
        validate_global_args(args)
        args.element = os.path.expanduser(args.element)
        assert len(set(args.index_set)) == len(args.index_set), \
            "--orbit-set must not repeat an index."
        assert not args.unfolded or args.quiver is not None, \
            "--unfolded needs --quiver."
        self.args = args
        return args

    def run(self, args):
        C, qa = load_inputs(args)
        index_set = args.index_set
        if args.unfolded:
            C = unfolded_datum(qa)
            index_set = orbit_vertex_set(qa, args.index_set)
        x = read_element(args.element, C)
        decompose = decompose_left if args.side == "left" else decompose_right
        p, c = decompose(index_set, x, args.max_height)
        report = {"projection": p.to_json(), "complement": c.to_json()}
        if args.unfolded:
            report["vertex_set"] = list(index_set)
        return report
