from trustlam.cli import (
        BaseCLI, add_file_arg, add_node_limit_arg, add_target_args,
        load_program, node_limit, resolve_target, print_json, positive_int, seed_int,
        )
from trustlam.env import get_default
from trustlam.machine import evaluate
from trustlam.analysis import confidence
from trustlam.syntax import Exp, Trust, print_term, print_dist
from trustlam.utils import frac2str


class CLI(BaseCLI):
    """
    Run the trust check on an experiment of n runs of a program's main term.
    Prints the seeded verdict of each trial and the exact probability that
    the check reduces to true.

    Without ``--target`` the target is the distribution main itself
    produces (output probabilities summed per output type).

    :doc:`Complete documentation here<../commands/trust>`

    Examples:

    .. code-block:: console

        $ trustlam trust coin --n 4 --target "(1/2 H, 1/2 T)@1/4"
        $ trustlam trust biased_coin --n 100 --target "(1/2 H, 1/2 T)@1/20" --trials 10
        $ trustlam trust dice --n 6 --eps 1/3
    """
    help_info = "Seeded trust verdicts and exact Pr(true) of an n-run experiment"

    def add_args(self):
        add_file_arg(self.parser)
        self.parser.add_argument("--n", type=positive_int, default=10,
                help="Number of runs of main in the experiment")
        add_target_args(self.parser)
        self.parser.add_argument("-s", "--seed", type=seed_int, default=0,
                help="Seed of the first trial (unsigned 64-bit)")
        self.parser.add_argument("-t", "--trials", type=positive_int, default=1,
                help="Number of seeded trust checks")
        self.parser.add_argument("--format", type=str, default="text", choices=("text", "json"),
                help="Output format")
        self.parser.add_argument("--decimal", action="store_true",
                help="Print Pr(true) as a decimal instead of an exact fraction")
        add_node_limit_arg(self.parser)

    def main(self, args):
        if args.seed + args.trials > 2**64:
            self.parser.error("seed + trials exceeds the unsigned 64-bit seed range")
        loaded = load_program(args.file)
        main = loaded.program.main
        target = resolve_target(args, loaded)
        checked = Trust(Exp(args.n, main), target)
        fuel = get_default("fuel")
        verdicts = [evaluate(checked, seed=args.seed + i, fuel=fuel, env=loaded.env,
                             record=False).final for i in range(args.trials)]
        prob = confidence(main, target, args.n, loaded.env,
                          limit=get_default("enumeration_limit"), node_limit=node_limit(args))

        if args.format == "json":
            print_json({
                "target": print_dist(target),
                "n": args.n,
                "verdicts": [{"seed": args.seed + i, "verdict": print_term(v)}
                             for i, v in enumerate(verdicts)],
                "confidence": frac2str(prob, args.decimal),
            })
            return
        print(f"# target {print_dist(target)}, n = {args.n}")
        for verdict in verdicts:
            print(print_term(verdict))
        print(f"Pr(true) = {frac2str(prob, args.decimal)}")
