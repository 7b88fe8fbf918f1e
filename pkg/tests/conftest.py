from layerpoisson.parsing import parse_expr

XY = ("x1", "y")
XYA = ("x1", "y", "a")
YA = ("y", "a")
X3Y = ("x1", "x2", "x3", "y")


def P(text, names=XY):
    """Build an exact polynomial from an expression over the given names."""
    return parse_expr(text, names, allow_negative_exponents=True)
