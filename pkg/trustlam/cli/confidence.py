import logging

from trustlam.cli import (
        BaseCLI, add_file_arg, add_node_limit_arg, add_target_args,
        load_program, node_limit, resolve_target, print_json, positive_int,
        )
from trustlam.env import get_default
from trustlam.analysis import confidence_curve, compare_confidence
from trustlam.syntax import print_dist
from trustlam.utils import frac2str, next_color

logger = logging.getLogger(__name__)


class CLI(BaseCLI):
    """
    Confidence values of a program's main term: for each number of runs n,
    the exact probability that the trust check on an n-run experiment
    reduces to true.

    Without ``--target`` the target is the distribution main itself
    produces, so values approach 1 as n grows. With ``--compare`` a second
    program is checked against the same target and the ratio of the two
    curves at the largest n is reported (precedes, succeeds, equivalent or
    inconclusive).

    :doc:`Complete documentation here<../commands/confidence>`

    Examples:

    .. code-block:: console

        $ trustlam confidence coin --target "(1/2 H, 1/2 T)@1/4" --n-max 12
        $ trustlam confidence coin --target "(1/2 H, 1/2 T)@1/4" --n 4 8 12
        $ trustlam confidence biased_coin --target "(1/2 H, 1/2 T)@1/20" --n 1000
        $ trustlam confidence coin --n-max 40 --plot confidence.png
        $ trustlam confidence biased_coin --compare coin --target "(1/2 H, 1/2 T)@1/10"
    """
    help_info = "Exact confidence values of a program against a target distribution"

    def add_args(self):
        add_file_arg(self.parser)
        add_target_args(self.parser)
        self.parser.add_argument("--n-max", type=positive_int, default=20,
                help="Compute confidence for n = 1..n-max")
        self.parser.add_argument("--n", type=positive_int, nargs="+", default=None,
                help="Explicit numbers of runs (overrides --n-max)")
        self.parser.add_argument("--compare", type=str, default=None, metavar="FILE",
                help="Second program compared against the same target")
        self.parser.add_argument("--format", type=str, default="text", choices=("text", "json"),
                help="Output format")
        self.parser.add_argument("--decimal", action="store_true",
                help="Print confidence values as decimals instead of exact fractions")
        self.parser.add_argument("--plot", type=str, default=None, metavar="FILE",
                help="Save a plot of the curve(s) to FILE (requires matplotlib)")
        add_node_limit_arg(self.parser)

    def main(self, args):
        loaded = load_program(args.file)
        target = resolve_target(args, loaded)
        ns = sorted(set(args.n)) if args.n else range(1, args.n_max + 1)
        limits = dict(limit=get_default("enumeration_limit"), node_limit=node_limit(args))
        curves = [confidence_curve(loaded.program.main, target, None, loaded.env, ns=ns,
                                   **limits)]
        verdict = None
        if args.compare:
            other = load_program(args.compare)
            curves.append(confidence_curve(other.program.main, target, None, other.env,
                                           ns=ns, **limits))
            verdict = compare_confidence(*curves, tol=get_default("compare_tol"),
                                         window=get_default("compare_window"))
            logger.info("%s vs %s: %s", loaded.path, other.path, verdict.value)

        if args.plot:
            self.plot(curves, [args.file, args.compare], args.plot)

        if args.format == "json":
            out = {"target": print_dist(target),
                   "curves": [c.to_dict(args.decimal) for c in curves]}
            if verdict is not None:
                out["verdict"] = verdict.value
            print_json(out)
            return
        print(f"# target {print_dist(target)}")
        for i, n in enumerate(curves[0].ns):
            values = "\t".join(frac2str(c.points[i][1], args.decimal) for c in curves)
            print(f"{n}\t{values}")
        if verdict is not None:
            print(f"# {args.file} {verdict.value} {args.compare}")

    @staticmethod
    def plot(curves, labels, save_file):
        """Plot every curve on one axis and save the figure."""
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
        fig, ax = plt.subplots(figsize=(5.5, 4))
        for i, (curve, label) in enumerate(zip(curves, labels)):
            curve.plot(ax, color=next_color(i), label=label)
        ax.legend()
        plt.tight_layout()
        plt.savefig(save_file)
        plt.close(fig)
