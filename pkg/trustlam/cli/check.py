from trustlam.cli import BaseCLI, add_file_arg, load_program, print_json
from trustlam.syntax import print_type, print_term


class CLI(BaseCLI):
    """
    Parse and type-check a program, printing the type of its main term.
    Errors are written to stderr as JSON diagnostics (one per line) and the
    exit status tells them apart: 2 for unreadable files, 3 for syntax errors
    and 4 for type errors.

    :doc:`Complete documentation here<../commands/check>`

    Examples:

    .. code-block:: console

        $ trustlam check dice
        $ trustlam check my_program.tl
        $ trustlam check my_program.tl --format json
    """
    help_info = "Type-check a program and print the type of main"

    def add_args(self):
        add_file_arg(self.parser)
        self.parser.add_argument("--format", type=str, default="text", choices=("text", "json"),
                help="Output format")

    def main(self, args):
        loaded = load_program(args.file)
        ty = print_type(loaded.typed.ty)
        if args.format == "json":
            print_json({"main": print_term(loaded.program.main), "type": ty})
        else:
            print(ty)
