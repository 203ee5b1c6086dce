"""Exact rational literals.

Every number in this package is a fractions.Fraction.  Fraction already
gives canonical form (positive denominator, reduced), exact arithmetic and
total ordering, so there is nothing to reimplement; this module only owns
the text round-trip used by graph files, weight specs and reports.
"""

from fractions import Fraction

from .errors import ParseError


def parse_rational(text):
    """Parse "3", "-5/2" or "0.5" as an exact rational.

    Decimal literals are read as exact decimal fractions (0.5 -> 1/2);
    nothing is ever rounded.
    """
    token = text.strip()
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational literal: {text!r}") from None


def format_rational(value):
    """Render a Fraction as "3" or "-5/2" (the parseable canonical form)."""
    return str(Fraction(value))


def approx_str(value, digits=12):
    """Decimal approximation for plotting/display only, never for computing."""
    return f"{float(Fraction(value)):.{digits}g}"
