from trustlam.cli import BaseCLI
from trustlam.env import clear
from trustlam.errors import ConfigError
from trustlam.parameters import descriptions


class CLI(BaseCLI):
    """
    Reset parameters set with ``trustlam set ...`` back to the built-in
    defaults.

    :doc:`Complete documentation here<../commands/reset>`

    Examples:

    .. code-block:: console

        $ trustlam reset all
        $ trustlam reset node_limit epsilon
        $ trustlam -e strict reset all
    """
    help_info = "Reset parameters of the default or labelled trustlam env"

    def add_args(self):
        self.parser.add_argument(
            "thing",
            nargs="+",
            help="'all' or names of the parameters to reset",
        )

    def main(self, args):
        if "all" in args.thing:
            clear(all)
            return
        unknown = [k for k in args.thing if k not in descriptions]
        if unknown:
            raise ConfigError(f"Unknown parameter(s): {', '.join(unknown)}")
        clear(args.thing)
