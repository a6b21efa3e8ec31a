"""
Example programs shipped with trustlam (``*.tl`` package data). Retrieve a
copy with ``trustlam get <name>`` or pass the bare name to any analysis
command, e.g. ``trustlam dist coin``.
"""
import glob
import os

basedir = os.path.abspath(os.path.dirname(__file__))
extension = ".tl"


def program_names():
    """Names (file stems) of the shipped programs, sorted."""
    files = glob.glob(os.path.join(basedir, "*" + extension))
    return sorted(os.path.splitext(os.path.basename(f))[0] for f in files)


def program_path(name):
    """
    Resolve a program argument: an existing path is returned unchanged, a
    shipped program name (with or without extension) maps to its package file.
    Anything else is returned unchanged so that opening it reports the error.

    Args:
        name (str): Path or shipped program name.

    Returns:
        str
    """
    if os.path.exists(name):
        return name
    stem = name[:-len(extension)] if name.endswith(extension) else name
    if stem in program_names():
        return os.path.join(basedir, stem + extension)
    return name
