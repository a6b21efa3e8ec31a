from trustlam.cli import BaseCLI, add_file_arg, add_node_limit_arg, load_program, node_limit, print_json
from trustlam.analysis import build_tree, tree_to_dict, tree_to_dot
from trustlam.syntax import print_term
from trustlam.utils import frac2str


class CLI(BaseCLI):
    """
    Reduction tree of a program's main term: one child per alternative of
    each call-by-name step, edges labelled with exact probabilities. The
    dot format can be rendered with graphviz.

    :doc:`Complete documentation here<../commands/tree>`

    Examples:

    .. code-block:: console

        $ trustlam tree coin_tree
        $ trustlam tree composite --format dot > tree.gv && dot -Tpng -O tree.gv
        $ trustlam tree dice --node-limit 20000 --format json
    """
    help_info = "Print the reduction tree of a program"

    def add_args(self):
        add_file_arg(self.parser)
        self.parser.add_argument("--format", type=str, default="text",
                choices=("text", "json", "dot"), help="Output format")
        self.parser.add_argument("--decimal", action="store_true",
                help="Print edge probabilities as decimals (text and json formats)")
        add_node_limit_arg(self.parser)

    def main(self, args):
        loaded = load_program(args.file)
        tree = build_tree(loaded.program.main, loaded.env, node_limit=node_limit(args))
        if args.format == "dot":
            print(tree_to_dot(tree), end="")
        elif args.format == "json":
            print_json(tree_to_dict(tree, args.decimal))
        else:
            self.print_tree(tree, args.decimal)

    @staticmethod
    def print_tree(tree, decimal=False):
        """Indented rendering, children below their parent with the edge probability."""
        print(print_term(tree.term))
        stack = [(child, p, 1) for p, child in reversed(tree.children)]
        while stack:
            node, p, depth = stack.pop()
            print(f"{'  ' * depth}[{frac2str(p, decimal)}] {print_term(node.term)}")
            stack.extend((child, q, depth + 1) for q, child in reversed(node.children))
