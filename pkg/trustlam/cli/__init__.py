import argparse
import json
import logging
import re
import sys
from collections import namedtuple
from importlib import import_module
from textwrap import dedent

from trustlam import __version__
from trustlam import env
from trustlam.errors import TrustlamError, Diagnostic
from trustlam.programs import program_path
from trustlam.syntax import parse_program, parse_dist, Dist
from trustlam.typecheck import SubtypeEnv, check_program
from trustlam.analysis import trust_target
from trustlam.utils import str2frac

logger = logging.getLogger(__name__)

commands = (
    "check",
    "run",
    "dist",
    "trust",
    "confidence",
    "tree",
    "get",
    "set",
    "reset",
    "info",
)

# exit status of errors that are not TrustlamErrors
IO_EXIT_CODE = 2

Loaded = namedtuple("Loaded", ["path", "program", "typed", "env"])


class BaseCLI:
    """
    Base class for CLI commands. More or less just a template for reference.

    Args:
        parser (argparse.ArgumentParser): argparse parser for parsing CLI command arguments
    """
    help_info = ""

    def __init__(self, parser):
        self.parser = parser

    def add_args(self):
        '''Command specific arguments'''
        return

    def main(self, args):
        '''Command specific main method'''
        return


class MyFormatter(argparse.ArgumentDefaultsHelpFormatter):
    """
    HelpFormatter that replaces reST refs in docstrings with readthedocs URLs
    to print to console. Also dedents and retains docstring format.
    """

    def _fill_text(self, text, width, indent):
        # replaces e.g. :doc:`text<ref_path>`
        pattern = r":[a-z]+:`[\w ]+<[.\w/]+>`"
        subpattern_link = r"<../[a-z/]+>"
        subpattern_text = r"`[\w ]+<"

        url = ": https://trustlam.rtfd.io/en/latest/"

        matches = re.findall(pattern, text)
        for match in matches:
            keep = re.search(subpattern_text, match).group()[1:-1]
            sub = re.search(subpattern_link, match).group()[4:-1]
            new = f"{keep}{url}{sub}.html"
            text = text.replace(match, new)

        # replaces e.g. .. command:: text
        pattern = r"[ ]*[.]{2} [\w-]+::[\w ]*\n\n"
        while re.search(pattern, text):
            text = re.sub(pattern, "", text)

        return dedent(text)


def positive_int(text):
    """argparse type for counts (trials, n, limits)."""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid int value: '{text}'")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return value


def seed_int(text):
    """argparse type for unsigned 64-bit seeds."""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid int value: '{text}'")
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError(f"seed must be an unsigned 64-bit integer, got {value}")
    return value


def fraction(text):
    """argparse type for exact fractions such as ``1/20``."""
    try:
        return str2frac(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def add_file_arg(parser):
    parser.add_argument("file", help="Program file (.tl) or name of a shipped program "
                        "(see 'trustlam get list')")


def add_node_limit_arg(parser):
    parser.add_argument("--node-limit", type=positive_int, default=None,
                        help="Max nodes/terms explored by exact analysis "
                        "(default: node_limit parameter, see 'trustlam info')")


def add_target_args(parser):
    parser.add_argument("--target", type=str, default=None, metavar="DIST",
                        help="Target distribution, e.g. '(1/2 H, 1/2 T)@1/4'. Defaults to "
                        "the output distribution of main grouped by output type")
    parser.add_argument("--eps", type=fraction, default=None, metavar="a/b",
                        help="Threshold, overrides the one written in --target "
                        "(default: epsilon parameter)")


def load_program(file):
    """
    Read, parse and type-check a program file.

    Args:
        file (str): Path to a .tl file or name of a shipped program.

    Returns:
        Loaded: ``(path, program, typed, env)`` namedtuple.
    """
    path = program_path(file)
    with open(path) as f:
        text = f.read()
    program = parse_program(text)
    typed = check_program(program)
    logger.debug("loaded %s", path)
    return Loaded(path, program, typed, SubtypeEnv.from_program(program))


def node_limit(args):
    return args.node_limit or env.get_default("node_limit")


def resolve_target(args, loaded):
    """
    Target distribution from ``--target``/``--eps`` or, without ``--target``,
    the output distribution of the program's main term.
    """
    eps = args.eps
    if args.target is None:
        eps = eps if eps is not None else env.get_default("epsilon")
        return trust_target(loaded.program.main, loaded.env, epsilon=eps,
                            limit=node_limit(args))
    target = parse_dist(args.target, loaded.program)
    if eps is not None:
        target = Dist(target.entries, eps)
    return target


def print_json(obj):
    print(json.dumps(obj, indent=2))


def report(exc):
    """Write JSON diagnostics of an error to stderr."""
    for diag in exc.diagnostics():
        print(json.dumps(diag.to_dict()), file=sys.stderr)


def main(argv=None):
    parser = argparse.ArgumentParser(prog="trustlam",
                                     description="trustlam CLI for checking, running and "\
                                             "analysing probabilistic programs\n\n"\
                                             "Complete documentation available at: "\
                                             "https://trustlam.rtfd.io",
                                     formatter_class=MyFormatter,
                                     )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true",
                        help="Log debug messages to stderr")
    parser.add_argument("-e", "--env", type=str, default=None, metavar="LABEL",
                        help="Use the labelled env file .env.LABEL instead of .env")
    subparsers = parser.add_subparsers(title="commands", dest="command")
    command_clis = {}
    for comm in commands:
        mod = "trustlam.cli." + comm
        CLI = import_module(mod).CLI
        doc = CLI.__doc__
        subparser = subparsers.add_parser(comm, help=CLI.help_info, description=doc,
                formatter_class=MyFormatter)
        cli = CLI(subparser)
        cli.add_args()
        command_clis[comm] = cli

    parsed_args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if parsed_args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    if parsed_args.command is None:
        parser.print_help()
        sys.exit(1)
    env.load(parsed_args.env)
    try:
        command_clis[parsed_args.command].main(parsed_args)
    except TrustlamError as exc:
        report(exc)
        sys.exit(exc.exit_code)
    except OSError as exc:
        print(json.dumps(Diagnostic("io", str(exc)).to_dict()), file=sys.stderr)
        sys.exit(IO_EXIT_CODE)
