# SPDX-FileCopyrightText: 2020-2023 CERN
# SPDX-FileCopyrightText: 2023 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Symmetric matrices, pencils and the group actions on them."""

from __future__ import annotations

import dataclasses
import typing as t

import sympy as sp

from ..core_algebra import BinaryQuartic, S, SingularSubstitution, T
from ..errors import PreconditionError
from ..utils.coerce_rational import coerce_rational

__all__ = [
    "AsymmetricMatrix",
    "COORDINATES",
    "DependentPencil",
    "Pencil",
    "SingularGroupElement",
    "SymMat4",
    "basis_change",
    "congruence_act",
    "discriminant_quartic",
    "pencil_from_forms",
    "quadratic_form",
    "rational_matrix",
    "sym_mat4",
    "upper_triangle",
]

COORDINATES = sp.symbols("x0:4")

SymMat4 = sp.ImmutableMatrix


class AsymmetricMatrix(PreconditionError):
    """A matrix that should be symmetric is not."""


class DependentPencil(PreconditionError):
    """The two generators of a pencil are linearly dependent."""


class SingularGroupElement(PreconditionError):
    """A group element is not invertible."""


def rational_matrix(entries: t.Any, shape: t.Tuple[int, int]) -> sp.ImmutableMatrix:
    """Coerce nested sequences (or a SymPy matrix) to an exact matrix of *shape*."""
    matrix = sp.Matrix(entries)
    if matrix.shape != shape:
        raise PreconditionError(f"expected shape {shape}, got {matrix.shape}")
    return sp.ImmutableMatrix(matrix.applyfunc(coerce_rational))


def sym_mat4(entries: t.Any) -> SymMat4:
    """Coerce *entries* to a symmetric 4×4 rational matrix.

    Raises:
        AsymmetricMatrix: if the result is not symmetric.
    """
    matrix = rational_matrix(entries, (4, 4))
    if not matrix.is_symmetric():
        raise AsymmetricMatrix(f"matrix is not symmetric: {matrix.tolist()}")
    return matrix


def upper_triangle(matrix: SymMat4) -> t.List[sp.Rational]:
    """Return the 10 coordinates of a symmetric matrix in the P⁹ of quadrics."""
    return [matrix[i, j] for i in range(4) for j in range(i, 4)]


@dataclasses.dataclass(frozen=True)
class Pencil:
    """The pencil ⟨Q0, Q1⟩ spanned by two symmetric 4×4 matrices.

    The pair is ordered; the point of the Grassmannian is its span. The
    quadric of a matrix Q is the form xᵀQx in the coordinates
    `COORDINATES`.

    Attributes:
        Q0: First generator.
        Q1: Second generator.

    Raises:
        AsymmetricMatrix: if either generator is not symmetric.
        DependentPencil: if the generators do not span a 2-plane.
    """

    Q0: SymMat4  # pylint: disable = invalid-name
    Q1: SymMat4  # pylint: disable = invalid-name

    def __post_init__(self) -> None:
        first, second = sym_mat4(self.Q0), sym_mat4(self.Q1)
        if sp.Matrix([upper_triangle(first), upper_triangle(second)]).rank() != 2:
            raise DependentPencil(
                f"generators are linearly dependent: {first.tolist()}, {second.tolist()}"
            )
        object.__setattr__(self, "Q0", first)
        object.__setattr__(self, "Q1", second)

    def member(self, s_value: t.Any, t_value: t.Any) -> sp.Matrix:
        """Return the matrix s·Q0 + t·Q1 at (s:t) = (*s_value*:*t_value*)."""
        return s_value * self.Q0 + t_value * self.Q1

    def forms(self) -> t.Tuple[sp.Expr, sp.Expr]:
        return quadratic_form(self.Q0), quadratic_form(self.Q1)

    def __str__(self) -> str:
        first, second = self.forms()
        return f"<{first}, {second}>"


def quadratic_form(matrix: sp.MatrixBase) -> sp.Expr:
    """Return xᵀQx in `COORDINATES`.

    Examples:

        >>> quadratic_form(sp.diag(1, 1, 1, 0))
        x0**2 + x1**2 + x2**2
    """
    coords = sp.Matrix(COORDINATES)
    return sp.expand((coords.T * matrix * coords)[0, 0])


def pencil_from_forms(first: t.Any, second: t.Any) -> Pencil:
    """Build a pencil from two quadratic forms in `COORDINATES`.

    The forms may be SymPy expressions or strings.

    Examples:

        >>> pencil = pencil_from_forms("x0*x1", "x0*x2")
        >>> pencil.Q0[0, 1]
        1/2
    """
    matrices = []
    for form in (first, second):
        expr = sp.sympify(form, locals={str(x): x for x in COORDINATES})
        poly = sp.Poly(expr, *COORDINATES, domain=sp.QQ)
        if not poly.is_zero and (not poly.is_homogeneous or poly.total_degree() != 2):
            raise PreconditionError(f"not a quadratic form in x0..x3: {form}")
        matrices.append(sp.hessian(expr, COORDINATES) / 2)
    return Pencil(*matrices)


def discriminant_quartic(pencil: Pencil) -> BinaryQuartic:
    """Return the binary quartic det(s·Q0 + t·Q1).

    Examples:

        >>> pencil = pencil_from_forms("x0**2 + x1**2 + x2**2", "x0*x3 + x1**2 + 2*x2**2")
        >>> discriminant_quartic(pencil).c
        (0, 0, -1/4, -3/4, -1/2)
    """
    return BinaryQuartic.from_expr(pencil.member(S, T).det(method="berkowitz"))


def congruence_act(group_element: t.Any, pencil: Pencil) -> Pencil:
    """Return ⟨g·Q0·gᵀ, g·Q1·gᵀ⟩.

    The discriminant of the image is det(g)² times that of *pencil*.

    Raises:
        SingularGroupElement: if det(g) = 0.
    """
    g = rational_matrix(group_element, (4, 4))
    if g.det() == 0:
        raise SingularGroupElement(f"group element is singular: {g.tolist()}")
    return Pencil(g * pencil.Q0 * g.T, g * pencil.Q1 * g.T)


def basis_change(pencil: Pencil, matrix: t.Any) -> Pencil:
    """Return ⟨m₀₀Q0 + m₀₁Q1, m₁₀Q0 + m₁₁Q1⟩, the same line with another basis.

    Raises:
        SingularSubstitution: if det(m) = 0.
    """
    m = rational_matrix(matrix, (2, 2))
    if m.det() == 0:
        raise SingularSubstitution(f"basis change is singular: {m.tolist()}")
    return Pencil(
        m[0, 0] * pencil.Q0 + m[0, 1] * pencil.Q1,
        m[1, 0] * pencil.Q0 + m[1, 1] * pencil.Q1,
    )
