# SPDX-FileCopyrightText: 2020-2023 CERN
# SPDX-FileCopyrightText: 2023 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Type checks for values on the projective line.

A point of P¹ in this package is either an exact rational or SymPy's
`~sympy.core.numbers.Infinity` singleton.
"""

from __future__ import annotations

import typing as t

import sympy as sp
from sympy.core.numbers import Infinity

if t.TYPE_CHECKING:  # pragma: no cover
    from typing import TypeGuard

__all__ = [
    "ProjectiveValue",
    "is_infinity",
]


ProjectiveValue = t.Union[sp.Rational, Infinity]


def is_infinity(value: object) -> TypeGuard[Infinity]:
    return value is sp.oo
