"""
Functions for interacting with the default parameter set (defaults.yaml).
If adding a new parameter, add a description/usage hint to
trustlam.parameters.descriptions, and the hint will appear in params.yaml
written by the :doc:`../commands/get` command.
"""
import os
from fractions import Fraction
from ruamel.yaml import YAML
from ruamel.yaml.comments import CommentedMap

from trustlam.utils import str2frac, frac2str

basedir = os.path.abspath(os.path.dirname(__file__))
param_file = os.path.join(basedir, "defaults.yaml")

descriptions = {
    "fuel": "Max CBN steps of a single evaluation before giving up",
    "node_limit": "Max nodes of a materialised reduction tree",
    "enumeration_limit": "Max count vectors enumerated by the confidence shortcut",
    "epsilon": "Default threshold of confidence and trust checks (exact a/b)",
    "compare_window": "Number of largest grid points compared by compare_confidence",
    "compare_tol": "Default ratio tolerance of compare_confidence (exact a/b)",
}

# Parameters stored as exact fractions, everything else is a positive int.
fraction_params = ("epsilon", "compare_tol")


def coerce(key, value):
    """
    Convert a raw parameter value (str from .env/environment or yaml scalar)
    to its python type.

    Args:
        key (str): Parameter name, must be one of ``descriptions``.
        value (str or int): Raw value.

    Returns:
        int or Fraction
    """
    if key not in descriptions:
        raise KeyError(f"Unknown parameter '{key}' (choose from {', '.join(descriptions)})")
    if key in fraction_params:
        return str2frac(value)
    value = int(value)
    if value < 1:
        raise ValueError(f"Parameter '{key}' must be a positive integer, got {value}")
    return value


def get_parameters():
    """
    Load built-in parameters from defaults.yaml.

    Returns:
        dict: ``{key: int or Fraction}``
    """
    with open(param_file) as file:
        raw = YAML(typ="safe").load(file.read())
    return {k: coerce(k, v) for k, v in raw.items()}


def read_yaml(file):
    """
    Read a (possibly partial) params.yaml edited by the user.

    Args:
        file (str): Path to yaml file.

    Returns:
        dict: Coerced ``{key: value}`` for every key present in the file.
    """
    with open(file) as f:
        raw = YAML(typ="safe").load(f.read()) or {}
    return {k: coerce(k, v) for k, v in raw.items()}


def write_yaml(param_dict, file):
    """
    Write parameter set to yaml file with a description comment after each
    parameter. Used by the :doc:`../commands/get` command to retrieve a
    params.yaml that can be edited and given back to :doc:`../commands/set`.

    Args:
        param_dict (dict): Dictionary containing each parameter and its
            corresponding value.
        file (file object): File to write parameter set to
            (generally params.yaml)
    """
    param_dict = CommentedMap(
        (k, frac2str(v) if isinstance(v, Fraction) else v) for k, v in param_dict.items()
        )
    lengths = [len(k) + len(str(v)) for k, v in param_dict.items()]
    column = max(lengths) + 4  # align parameter description comments
    for param in param_dict:
        description = descriptions.get(param, f"No description available for parameter '{param}'")
        param_dict.yaml_add_eol_comment(description, key=param, column=column)
    YAML().dump(param_dict, file)
