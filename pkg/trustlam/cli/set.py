import os

from trustlam.cli import BaseCLI
from trustlam.env import set_default
from trustlam.parameters import read_yaml


class CLI(BaseCLI):
    """
    Override default parameters (fuel, node limit, threshold, etc.) in the
    trustlam env file. Takes ``KEY VALUE`` pairs or a params.yaml obtained
    with ``trustlam get params``. Environment variables ``TRUSTLAM_<KEY>``
    still take precedence.

    :doc:`Complete documentation here<../commands/set>`

    Examples:

    .. code-block:: console

        $ trustlam set node_limit 1000000
        $ trustlam set epsilon 1/10 compare_window 10
        $ trustlam set params.yaml
        $ trustlam -e strict set epsilon 1/100 # labelled env, use with -e strict
    """
    help_info = "Set default parameters from KEY VALUE pairs or params.yaml"

    def add_args(self):
        self.parser.add_argument(
            "thing",
            nargs="+",
            help="KEY VALUE pairs (see 'trustlam info') or a .yaml parameter file",
        )

    def main(self, args):
        if len(args.thing) == 1 and os.path.splitext(args.thing[0])[-1] in (".yaml", ".yml"):
            params = read_yaml(args.thing[0])
        elif len(args.thing) % 2 == 0:
            params = dict(zip(args.thing[::2], args.thing[1::2]))
        else:
            self.parser.error("expected KEY VALUE pairs or a single .yaml file")
        for key, value in params.items():
            set_default(key, value)
