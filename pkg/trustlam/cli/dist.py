from trustlam.cli import BaseCLI, add_file_arg, add_node_limit_arg, load_program, node_limit, print_json
from trustlam.analysis import output_distribution
from trustlam.syntax import print_term
from trustlam.utils import frac2str


class CLI(BaseCLI):
    """
    Exact output distribution of a program's main term: every value it can
    reduce to, with the total probability of the reduction paths reaching
    it. Alpha-equivalent values are merged.

    :doc:`Complete documentation here<../commands/dist>`

    Examples:

    .. code-block:: console

        $ trustlam dist composite
        $ trustlam dist coin_exp2 --format json
        $ trustlam dist dice --node-limit 1000000 --decimal
    """
    help_info = "Print the exact output distribution of a program"

    def add_args(self):
        add_file_arg(self.parser)
        self.parser.add_argument("--format", type=str, default="text", choices=("text", "json"),
                help="Output format")
        self.parser.add_argument("--decimal", action="store_true",
                help="Print probabilities as decimals instead of exact fractions")
        add_node_limit_arg(self.parser)

    def main(self, args):
        loaded = load_program(args.file)
        dist = output_distribution(loaded.program.main, loaded.env, limit=node_limit(args))
        if args.format == "json":
            print_json(dist.to_dict(args.decimal))
            return
        for value, p in dist:
            print(f"{print_term(value)}: {frac2str(p, args.decimal)}")
