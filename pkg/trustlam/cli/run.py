import logging

from trustlam.cli import BaseCLI, add_file_arg, load_program, print_json, positive_int, seed_int
from trustlam.env import get_default
from trustlam.machine import evaluate
from trustlam.syntax import print_term
from trustlam.utils import frac2str

logger = logging.getLogger(__name__)


class CLI(BaseCLI):
    """
    Evaluate the main term of a program with seeded call-by-name reduction.
    Trial i uses seed ``seed + i``, so reruns print the same values.

    :doc:`Complete documentation here<../commands/run>`

    Examples:

    .. code-block:: console

        $ trustlam run coin
        $ trustlam run coin --seed 42 --trials 100
        $ trustlam run composite --trace
        $ trustlam run dice --trace --format json > trace.json
    """
    help_info = "Evaluate a program with a seeded random number generator"

    def add_args(self):
        add_file_arg(self.parser)
        self.parser.add_argument("-s", "--seed", type=seed_int, default=0,
                help="Seed of the first trial (unsigned 64-bit)")
        self.parser.add_argument("-t", "--trials", type=positive_int, default=1,
                help="Number of independent evaluations")
        self.parser.add_argument("--trace", action="store_true",
                help="Also print every reduction step")
        self.parser.add_argument("--format", type=str, default="text", choices=("text", "json"),
                help="Output format")

    def main(self, args):
        if args.seed + args.trials > 2**64:
            self.parser.error("seed + trials exceeds the unsigned 64-bit seed range")
        loaded = load_program(args.file)
        fuel = get_default("fuel")
        traces = []
        for i in range(args.trials):
            traces.append(evaluate(loaded.program.main, seed=args.seed + i, fuel=fuel,
                                   env=loaded.env, record=args.trace))
        logger.debug("%d trials, max %d steps", len(traces), max(t.n_steps for t in traces))

        if args.format == "json":
            if args.trace:
                print_json({"runs": [t.to_dict() for t in traces]})
            else:
                print_json({"runs": [{"seed": t.seed, "final": print_term(t.final)}
                                     for t in traces]})
            return
        for trace in traces:
            if args.trace:
                self.print_trace(trace)
            else:
                print(print_term(trace.final))

    @staticmethod
    def print_trace(trace):
        """Human readable trace: one line per step, then the value reached."""
        print(f"# seed {trace.seed}")
        for _, step in trace.steps:
            print(f"{step.tag:>12} {frac2str(step.probability):>6}  {print_term(step.reduct)}")
        print(print_term(trace.final))
