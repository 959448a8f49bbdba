# SPDX-FileCopyrightText: 2020-2023 CERN
# SPDX-FileCopyrightText: 2023 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Linear-algebra helpers shared by the normal-form pipelines."""

from __future__ import annotations

import enum
import itertools
import typing as t

import mpmath
import sympy as sp

from ..core_algebra import mp_rational
from ..pencil import Pencil, SingularMember

__all__ = [
    "Path",
    "congruence_diagonalize",
    "max_abs",
    "nodal_basis",
    "small_integers",
    "to_mp_matrix",
]


class Path(enum.Enum):
    """How a normal form was reached."""

    EXACT = "Exact"
    CERTIFIED_NUMERIC = "CertifiedNumeric"


def small_integers() -> t.Iterator[int]:
    """Yield 0, 1, -1, 2, -2, ...

    Examples:

        >>> list(itertools.islice(small_integers(), 5))
        [0, 1, -1, 2, -2]
    """
    yield 0
    for k in itertools.count(1):
        yield k
        yield -k


def congruence_diagonalize(
    matrix: sp.MatrixBase,
) -> t.Tuple[sp.ImmutableMatrix, t.List[sp.Rational]]:
    """Diagonalize a symmetric rational matrix by congruence over ℚ.

    Returns:
        A tuple ``(P, d)`` with ``P.T * matrix * P == diag(*d)``. Nonzero
        entries of *d* come first, in pivot order; the columns of *P*
        belonging to zero entries span the radical of the form.

    Examples:

        >>> basis, diagonal = congruence_diagonalize(sp.Matrix([[0, 1], [1, 0]]))
        >>> diagonal
        [2, -1/2]
        >>> basis.T * sp.Matrix([[0, 1], [1, 0]]) * basis == sp.diag(*diagonal)
        True
    """
    work = sp.Matrix(matrix)
    size = work.rows
    basis = sp.eye(size)

    def combine(target: int, source: int, factor: sp.Rational) -> None:
        basis[:, target] = basis[:, target] + factor * basis[:, source]
        work[:, target] = work[:, target] + factor * work[:, source]
        work[target, :] = work[target, :] + factor * work[source, :]

    def swap(first: int, second: int) -> None:
        basis.col_swap(first, second)
        work.col_swap(first, second)
        work.row_swap(first, second)

    for i in range(size):
        if work[i, i] == 0:
            pivot = next((j for j in range(i + 1, size) if work[j, j] != 0), None)
            if pivot is not None:
                swap(i, pivot)
            else:
                partner = next((j for j in range(i + 1, size) if work[i, j] != 0), None)
                if partner is None:
                    continue
                # All later diagonal entries vanish, so this makes work[i, i] = 2·work[i, j].
                combine(i, partner, sp.Integer(1))
        for j in range(i + 1, size):
            if work[i, j] != 0:
                combine(j, i, -work[i, j] / work[i, i])
    order = sorted(range(size), key=lambda k: work[k, k] == 0)
    return (
        sp.ImmutableMatrix(basis.extract(list(range(size)), order)),
        [work[k, k] for k in order],
    )


def nodal_basis(pencil: Pencil, double: SingularMember) -> sp.ImmutableMatrix:
    """Choose a basis change putting the tangent member first.

    The first row of the result selects the rank-3 member at the double
    root. The second row selects the first nonsingular member of the
    form ``e + k·(s₀, t₀)`` for k = 0, 1, -1, ..., where e is a unit
    vector complementing the double root (s₀:t₀).
    """
    s_value, t_value = t.cast(t.Tuple[sp.Rational, sp.Rational], double.root)
    complement = (0, 1) if s_value != 0 else (1, 0)
    for k in small_integers():
        row = (complement[0] + k * s_value, complement[1] + k * t_value)
        if pencil.member(*row).det() != 0:
            return sp.ImmutableMatrix([[s_value, t_value], list(row)])
    raise AssertionError("unreachable")  # pragma: no cover


def to_mp_matrix(matrix: sp.MatrixBase) -> mpmath.matrix:
    """Convert an exact matrix at the current mpmath precision."""
    return mpmath.matrix(
        [[mp_rational(matrix[i, j]) for j in range(matrix.cols)] for i in range(matrix.rows)]
    )


def max_abs(matrix: mpmath.matrix) -> mpmath.mpf:
    return max(
        (abs(matrix[i, j]) for i in range(matrix.rows) for j in range(matrix.cols)),
        default=mpmath.mpf(0),
    )
