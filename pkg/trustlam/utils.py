"""
Assorted utilities for reading and writing exact fractions, plus plot colours.
"""
from fractions import Fraction
import re

#seaborn.color_palette('deep')
colors = [(0.2980392156862745, 0.4470588235294118, 0.6901960784313725),
          (0.8666666666666667, 0.5176470588235295, 0.3215686274509804),
          (0.3333333333333333, 0.6588235294117647, 0.40784313725490196),
          (0.7686274509803922, 0.3058823529411765, 0.3215686274509804),
          (0.5058823529411764, 0.4470588235294118, 0.7019607843137254),
          (0.5764705882352941, 0.47058823529411764, 0.3764705882352941)]

_rat_pattern = re.compile(r"\s*(-?)\s*(\d+)\s*(?:/\s*(\d+))?\s*$")


def next_color(i):
    """Colour for the i-th curve of a plot, cycling through the palette."""
    return colors[i % len(colors)]


def str2frac(text):
    """
    Parse an exact fraction written ``a/b``, ``a`` or ``-a/b``. Decimals are
    rejected.

    Args:
        text (str or int or Fraction): Fraction to parse.

    Returns:
        Fraction: Value in lowest terms.
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    match = _rat_pattern.match(str(text))
    if not match:
        raise ValueError(f"Not an exact fraction: {text!r} (use a/b, e.g. 1/20)")
    sign, num, den = match.groups()
    if den is not None and int(den) == 0:
        raise ValueError(f"Zero denominator in {text!r}")
    value = Fraction(int(num), int(den) if den else 1)
    return -value if sign else value


def frac2str(value, decimal=False):
    """
    Render a Fraction as ``a/b`` (or ``a`` for integers). With ``decimal=True``
    a float rendering is returned instead, for display only.
    """
    value = Fraction(value)
    if decimal:
        return repr(float(value))
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
