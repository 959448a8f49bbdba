# SPDX-FileCopyrightText: 2020-2023 CERN
# SPDX-FileCopyrightText: 2023 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Simple helper functions to deal with exact rationals."""

import fractions
import numbers
import re
import typing as t

import sympy as sp

RationalLike = t.Union[int, str, fractions.Fraction, sp.Rational]

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def coerce_rational_tuple(collection: t.Iterable[RationalLike]) -> t.Tuple[sp.Rational, ...]:
    """Coerce a collection of rational-like values to a tuple of rationals."""
    return tuple(coerce_rational(num) for num in collection)


def coerce_rational(number: t.Any) -> sp.Rational:
    """Turn rational-like values into SymPy rationals.

    This accepts integers (including NumPy integers),
    `fractions.Fraction`, SymPy rationals and strings of the form
    ``"num/den"`` or ``"num"``. It rejects floats and everything else
    that is not exact, since silently rounding would defeat the purpose
    of exact arithmetic.

    Examples:

        >>> coerce_rational("3/4")
        3/4
        >>> coerce_rational("-6/8")
        -3/4
        >>> coerce_rational(2)
        2
        >>> from fractions import Fraction
        >>> coerce_rational(Fraction(22, 7))
        22/7
        >>> coerce_rational(0.5)
        Traceback (most recent call last):
        ...
        ValueError: not an exact rational: 0.5
        >>> coerce_rational("1/0")
        Traceback (most recent call last):
        ...
        ValueError: zero denominator in '1/0'
    """
    if isinstance(number, sp.Rational):
        return number
    if isinstance(number, bool):
        raise ValueError(f"not an exact rational: {number!r}")
    if isinstance(number, numbers.Integral):
        return sp.Integer(int(number))
    if isinstance(number, fractions.Fraction):
        return sp.Rational(number.numerator, number.denominator)
    if isinstance(number, str):
        match = _RATIONAL_PATTERN.match(number)
        if match is None:
            raise ValueError(f"not an exact rational: {number!r}")
        num, den = match.groups()
        if den is not None and int(den) == 0:
            raise ValueError(f"zero denominator in {number!r}")
        return sp.Rational(int(num), int(den) if den is not None else 1)
    if isinstance(number, sp.Expr) and number.is_Rational:
        return t.cast(sp.Rational, number)
    raise ValueError(f"not an exact rational: {number!r}")


def format_rational(number: sp.Rational) -> str:
    """Inverse of `coerce_rational()` for the ``"num/den"`` wire format.

    Examples:

        >>> format_rational(coerce_rational("-6/8"))
        '-3/4'
        >>> format_rational(coerce_rational(2))
        '2/1'
    """
    return f"{number.p}/{number.q}"
