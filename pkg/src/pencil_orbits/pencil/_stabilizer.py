# SPDX-FileCopyrightText: 2020-2023 CERN
# SPDX-FileCopyrightText: 2023 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Infinitesimal stabilizers of pencils in pgl₄."""

from __future__ import annotations

import dataclasses

import sympy as sp

from ._pencil import Pencil

__all__ = [
    "GROUP_DIMENSION",
    "StabilizerReport",
    "infinitesimal_stabilizer_dim",
]

GROUP_DIMENSION = 15


@dataclasses.dataclass(frozen=True)
class StabilizerReport:
    """Dimensions of the stabilizer Lie algebra and of the orbit.

    Attributes:
        lie_algebra_dim: Dimension of the stabilizer in pgl₄.
        orbit_dim: ``15 - lie_algebra_dim``.
    """

    lie_algebra_dim: int

    @property
    def orbit_dim(self) -> int:
        return GROUP_DIMENSION - self.lie_algebra_dim


def infinitesimal_stabilizer_dim(pencil: Pencil) -> StabilizerReport:
    """Solve XᵀQᵢ + QᵢX ∈ span(Q0, Q1) for X ∈ gl₄.

    The unknowns are the 16 entries of X and the coordinates (aᵢ, bᵢ) of
    each image in the span; each of the two conditions contributes the
    10 upper-triangle equations of a symmetric matrix. Scalar matrices
    always solve the system and are quotiented out.

    Examples:

        >>> from pencil_orbits.pencil import pencil_from_forms
        >>> report = infinitesimal_stabilizer_dim(
        ...     pencil_from_forms("x0**2 + x1**2 + x2**2 + x3**2", "x1**2 + 2*x2**2 + 3*x3**2")
        ... )
        >>> report.lie_algebra_dim, report.orbit_dim
        (0, 15)
    """
    entries = sp.symbols("X0:16")
    generator = sp.Matrix(4, 4, entries)
    span_coords = sp.symbols("a0 b0 a1 b1")
    equations = []
    for index, quadric in enumerate((pencil.Q0, pencil.Q1)):
        alpha, beta = span_coords[2 * index : 2 * index + 2]
        residual = (
            generator.T * quadric + quadric * generator - alpha * pencil.Q0 - beta * pencil.Q1
        )
        equations.extend(residual[i, j] for i in range(4) for j in range(i, 4))
    system, _ = sp.linear_eq_to_matrix(equations, [*entries, *span_coords])
    nullity = system.shape[1] - system.rank()
    return StabilizerReport(nullity - 1)
