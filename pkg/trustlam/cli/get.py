import os
import shutil

from trustlam.cli import BaseCLI
from trustlam.env import get_defaults
from trustlam.parameters import write_yaml
from trustlam.programs import program_names, program_path


class CLI(BaseCLI):
    """
    Get a copy of a shipped example program, or params.yaml holding the
    parameters currently in force (edit it and give it back to
    ``trustlam set``).

    :doc:`Complete documentation here<../commands/get>`

    Examples:

    .. code-block:: console

        $ trustlam get list # see available example programs
        $ trustlam get coin # writes coin.tl to $PWD
        $ trustlam get params # writes params.yaml to $PWD
    """
    help_info = "Get an example program or params.yaml"

    def add_args(self):
        self.parser.add_argument(
            "thing",
            type=str,
            help="'list', 'params' or the name of an example program",
        )

    def main(self, args):
        if args.thing == "list":
            print()
            print("# Available example programs:")
            for name in program_names():
                print(name)
            print()
            return

        if args.thing in ("params", "params.yaml"):
            with open("params.yaml", "w") as file:
                write_yaml(get_defaults(), file)
            return

        name = args.thing[:-3] if args.thing.endswith(".tl") else args.thing
        if name not in program_names():
            raise FileNotFoundError(f"No example program named '{name}' "
                                    "(see 'trustlam get list')")
        shutil.copy(program_path(name), os.path.join(".", name + ".tl"))
