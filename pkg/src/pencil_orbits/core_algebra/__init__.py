# SPDX-FileCopyrightText: 2020-2023 CERN
# SPDX-FileCopyrightText: 2023 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Exact binary quartics, their invariants and certified complex roots.

Rationals are `sympy.Rational`, univariate polynomials are `sympy.Poly`
over ℚ, and certified numerics use `mpmath`.
"""

from ._quartic import (
    BINOMIALS,
    BinaryQuartic,
    InvariantTriple,
    RootFactor,
    RootType,
    S,
    SingularSubstitution,
    T,
    UndefinedJ,
    X,
    ZeroForm,
    binary_quartic_from_roots,
    gl2_substitute,
    invariants,
    j_invariant,
    root_factors,
    root_type,
    weighted_invariants,
)
from ._roots import (
    DEFAULT_PRECISION_BITS,
    MAX_PRECISION_BITS,
    CRoot,
    RootPoint,
    U,
    ZeroPolynomial,
    as_unipoly,
    complex_roots,
    mp_rational,
    quartic_roots,
)

__all__ = [
    "BINOMIALS",
    "BinaryQuartic",
    "CRoot",
    "DEFAULT_PRECISION_BITS",
    "InvariantTriple",
    "MAX_PRECISION_BITS",
    "RootFactor",
    "RootPoint",
    "RootType",
    "S",
    "SingularSubstitution",
    "T",
    "U",
    "UndefinedJ",
    "X",
    "ZeroForm",
    "ZeroPolynomial",
    "as_unipoly",
    "binary_quartic_from_roots",
    "complex_roots",
    "gl2_substitute",
    "invariants",
    "j_invariant",
    "mp_rational",
    "quartic_roots",
    "root_factors",
    "root_type",
    "weighted_invariants",
]
