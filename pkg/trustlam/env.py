"""
Functions for controlling trustlam env configurations (fuel, node limit,
default threshold, etc.), i.e. controls things set with CLI
:doc:`../commands/set` command.

A value is resolved from the process environment (``TRUSTLAM_<KEY>``) first,
then from the package .env file, then from defaults.yaml.
"""
import os
import dotenv

from trustlam.errors import ConfigError
from trustlam.parameters import coerce, get_parameters, descriptions

basedir = os.path.abspath(os.path.dirname(__file__))
default_env_file = os.path.join(basedir, ".env")
env_file = default_env_file
prefix = "TRUSTLAM_"


def env_key(key):
    """``node_limit`` -> ``TRUSTLAM_NODE_LIMIT``"""
    return prefix + key.upper()


def set_env(key, value):
    """Set key-value to global env file."""
    if not os.path.exists(env_file):
        open(env_file, "a").close()
    dotenv.set_key(env_file, key, value)


def get_env():
    """Get all key-values from global env file."""
    if not os.path.exists(env_file):
        return {}
    values = dotenv.dotenv_values(env_file)
    return values


def load(label):
    """Sets global env file if different from default .env. Used to load custom
    envs essentially.
    """
    if label:
        global env_file
        env_file = default_env_file + "." + label


def set_default(key, value):
    """
    Validate and save a parameter override to the env file.

    Args:
        key (str): Parameter name (see :data:`trustlam.parameters.descriptions`).
        value (str): New value, e.g. ``"1/4"`` for epsilon.
    """
    try:
        coerce(key, value)
    except (KeyError, ValueError) as exc:
        raise ConfigError(str(exc).strip("'\"")) from exc
    set_env(env_key(key), str(value))


def get_default(key):
    """
    Resolve a parameter: process environment, then env file, then defaults.yaml.

    Args:
        key (str): Parameter name, e.g. ``"node_limit"``.

    Returns:
        int or Fraction
    """
    return resolve(key)[0]


def resolve(key):
    """Resolved value of a parameter and where it came from."""
    if key not in descriptions:
        raise ConfigError(f"Unknown parameter '{key}'")
    for source, values in (("environment", os.environ), (env_file, get_env())):
        raw = values.get(env_key(key))
        if raw:
            try:
                return coerce(key, raw), source
            except ValueError as exc:
                raise ConfigError(f"Bad value for {env_key(key)} in {source}: {exc}") from exc
    return get_parameters()[key], "defaults.yaml"


def get_defaults():
    """All parameters resolved with :func:`get_default`."""
    return {key: get_default(key) for key in descriptions}


def clear(keys):
    """
    Clear specific parameters (or entire env) for loaded global env file.
    """
    if keys is all:
        if os.path.exists(env_file):
            os.remove(env_file)
    else:
        vals = get_env()
        for key in keys:
            if vals.get(env_key(key)):
                dotenv.unset_key(env_file, env_key(key))
