from trustlam import env
from trustlam.cli import BaseCLI
from trustlam.parameters import descriptions
from trustlam.utils import frac2str


class CLI(BaseCLI):
    """
    Display the parameters in force and where each one comes from (process
    environment, env file or built-in defaults.yaml).

    :doc:`Complete documentation here<../commands/info>`

    Examples:

    .. code-block:: console

        $ trustlam info
        $ trustlam -e strict info # labelled env
    """
    help_info = "Show parameters in force and their sources"

    def main(self, args):
        print("-" * 64)
        print(f"env file: {env.env_file}")
        print()
        width = max(len(k) for k in descriptions)
        for key, description in descriptions.items():
            value, source = env.resolve(key)
            print(f"{key:<{width}} = {frac2str(value)}    [{source}]")
            print(f"{'':<{width}}   {description}")
        print("-" * 64)
