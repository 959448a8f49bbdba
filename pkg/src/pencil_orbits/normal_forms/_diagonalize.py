# SPDX-FileCopyrightText: 2020-2023 CERN
# SPDX-FileCopyrightText: 2023 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Diagonal pencils and simultaneous diagonalization of smooth pencils."""

from __future__ import annotations

import dataclasses
import typing as t
from logging import getLogger

import mpmath
import sympy as sp

from ..core_algebra import (
    DEFAULT_PRECISION_BITS,
    MAX_PRECISION_BITS,
    BinaryQuartic,
    CRoot,
    X,
    complex_roots,
    mp_rational,
    root_factors,
)
from ..errors import CertificationError, PreconditionError
from ..pencil import OrbitTag, Pencil, classify
from ..utils.coerce_rational import coerce_rational_tuple
from ._linear import Path, max_abs, small_integers, to_mp_matrix

__all__ = [
    "DiagonalizationResult",
    "NotSmooth",
    "RepeatedLambda",
    "diagonal_pencil",
    "realize_quartic",
    "simultaneous_diagonalize",
]

LOG = getLogger(__name__)

Eigenvalue = t.Union[sp.Rational, CRoot]


class RepeatedLambda(PreconditionError):
    """Two diagonal entries coincide."""


class NotSmooth(PreconditionError):
    """The pencil does not have four distinct singular members."""


@dataclasses.dataclass(frozen=True)
class DiagonalizationResult:
    """A simultaneous diagonalization of a smooth pencil.

    With ``B0, B1`` the generators after *basis_change*,
    ``transform.T * B0 * transform`` is the identity and
    ``transform.T * B1 * transform`` is ``diag(lambdas)``: exactly on the
    exact path, up to *residual* otherwise.

    Attributes:
        lambdas: Eigenvalues of B0⁻¹B1, rational or certified.
        transform: Columns are the rescaled eigenvectors; a SymPy matrix
            on the exact path, an mpmath matrix otherwise.
        path: Whether the result is exact.
        residual: Largest entry of the two defects; zero if exact.
        basis_change: 2×2 matrix m with B0 = m₀₀Q0 + m₀₁Q1 and
            B1 = m₁₀Q0 + m₁₁Q1. The identity unless det(Q0) = 0.
        precision_bits: Working precision of the numeric path.
    """

    lambdas: t.Tuple[Eigenvalue, ...]
    transform: t.Any
    path: Path
    residual: mpmath.mpf
    basis_change: sp.ImmutableMatrix
    precision_bits: t.Optional[int] = None


def diagonal_pencil(*lambdas: t.Any) -> Pencil:
    """Return ⟨Σxᵢ², Σλᵢxᵢ²⟩, whose discriminant is ∏(s + λᵢt).

    Raises:
        RepeatedLambda: unless the four λᵢ are pairwise distinct.
    """
    values = coerce_rational_tuple(lambdas)
    if len(values) != 4:
        raise PreconditionError(f"expected 4 diagonal entries, got {len(values)}")
    if len(set(values)) != 4:
        raise RepeatedLambda(f"diagonal entries are not distinct: {values}")
    return Pencil(sp.eye(4), sp.diag(*values))


def realize_quartic(quartic: BinaryQuartic) -> Pencil:
    """Return a diagonal pencil whose discriminant is proportional to *quartic*.

    A root (s₀:t₀) contributes the diagonal entries t₀ and −s₀, hence the
    factor t₀s − s₀t.

    Raises:
        PreconditionError: unless *quartic* has four distinct rational
            roots on P¹.
    """
    factors = root_factors(quartic)
    if len(factors) != 4 or not all(factor.is_rational for factor in factors):
        raise PreconditionError(f"{quartic} does not split into distinct rational roots")
    points = [factor.homogeneous_point for factor in factors]
    return Pencil(
        sp.diag(*(t_value for _, t_value in points)),
        sp.diag(*(-s_value for s_value, _ in points)),
    )


def _smooth_generator(pencil: Pencil) -> sp.ImmutableMatrix:
    for k in small_integers():
        if pencil.member(1, k).det() != 0:
            return sp.ImmutableMatrix([[1, k], [0, 1]])
    raise AssertionError("unreachable")  # pragma: no cover


def simultaneous_diagonalize(
    pencil: Pencil, precision_bits: int = DEFAULT_PRECISION_BITS
) -> DiagonalizationResult:
    """Diagonalize both generators of a smooth pencil at once.

    The eigenvalues of T = B0⁻¹B1 are the negatives of the roots x of
    the discriminant in the chart (x:1). The eigenvectors are orthogonal
    for B0 and get rescaled to B0(v, v) = 1. If det(Q0) = 0, the first
    member Q0 + k·Q1 with nonzero determinant replaces Q0.

    The exact path is taken when T has rational eigenvalues and every
    B0(v, v) is a rational square. Exact eigenvalues sort ascending,
    numeric ones by real, then imaginary part.

    Raises:
        NotSmooth: if the pencil is not smooth.
        CertificationError: if the numeric path does not certify.

    Examples:

        >>> result = simultaneous_diagonalize(diagonal_pencil(0, 1, 2, 3))
        >>> result.lambdas, result.path
        ((0, 1, 2, 3), <Path.EXACT: 'Exact'>)
        >>> result.transform == sp.eye(4)
        True
    """
    verdict = classify(pencil, precision_bits)
    if verdict.tag is not OrbitTag.SMOOTH_FIBER:
        raise NotSmooth(f"pencil is {verdict.tag.value} with root type {verdict.root_type}")
    basis_change = _smooth_generator(pencil)
    first = pencil.member(*basis_change.row(0))
    second = pencil.member(*basis_change.row(1))
    operator = first.inv() * second
    charpoly = sp.Poly(operator.charpoly(X).as_expr(), X, domain=sp.QQ)
    _, factors = charpoly.factor_list()
    if all(factor.degree() == 1 for factor, _ in factors):
        exact = _exact_diagonalization(operator, first, second, factors)
        if exact is not None:
            lambdas, transform = exact
            return DiagonalizationResult(
                lambdas, transform, Path.EXACT, mpmath.mpf(0), basis_change
            )
    LOG.info("no rational eigenbasis, diagonalizing %s numerically", pencil)
    return _numeric_diagonalization(
        operator, first, second, charpoly, basis_change, precision_bits
    )


def _exact_diagonalization(
    operator: sp.MatrixBase,
    first: sp.MatrixBase,
    second: sp.MatrixBase,
    factors: t.Sequence[t.Tuple[sp.Poly, int]],
) -> t.Optional[t.Tuple[t.Tuple[sp.Rational, ...], sp.ImmutableMatrix]]:
    lambdas = sorted(-factor.all_coeffs()[1] / factor.all_coeffs()[0] for factor, _ in factors)
    columns = []
    for value in lambdas:
        vector = (operator - value * sp.eye(4)).nullspace()[0]
        scale = sp.sqrt((vector.T * first * vector)[0, 0])
        if not scale.is_Rational:
            LOG.debug("B0(v, v) is not a rational square for eigenvalue %s", value)
            return None
        columns.append(vector / scale)
    transform = sp.ImmutableMatrix(sp.Matrix.hstack(*columns))
    if transform.T * first * transform != sp.eye(4) or (
        transform.T * second * transform != sp.diag(*lambdas)
    ):
        raise CertificationError("exact eigenbasis does not diagonalize the pencil")
    return tuple(lambdas), transform


def _numeric_diagonalization(
    operator: sp.MatrixBase,
    first: sp.MatrixBase,
    second: sp.MatrixBase,
    charpoly: sp.Poly,
    basis_change: sp.ImmutableMatrix,
    precision_bits: int,
) -> DiagonalizationResult:
    # Columns of adj(xI − T) at a simple eigenvalue span its eigenline.
    adjugate = (X * sp.eye(4) - operator).adjugate(method="berkowitz")
    coeffs = [
        [sp.Poly(adjugate[i, j], X, domain=sp.QQ).all_coeffs() for j in range(4)]
        for i in range(4)
    ]
    bits = precision_bits
    while True:
        roots = complex_roots(charpoly, bits)
        bits = max(bits, max(root.precision_bits for root in roots))
        with mpmath.mp.workprec(bits):
            first_mp, second_mp = to_mp_matrix(first), to_mp_matrix(second)
            adjugate_mp = [[[mp_rational(c) for c in entry] for entry in row] for row in coeffs]
            transform = mpmath.matrix(4, 4)
            for col, root in enumerate(roots):
                candidates = [
                    mpmath.matrix(
                        [mpmath.polyval(adjugate_mp[i][j], root.approximation) for i in range(4)]
                    )
                    for j in range(4)
                ]
                vector = max(candidates, key=mpmath.norm)
                vector = vector / mpmath.sqrt((vector.T * first_mp * vector)[0, 0])
                for row in range(4):
                    transform[row, col] = vector[row]
            eigen = mpmath.diag([root.approximation for root in roots])
            residual = max(
                max_abs(transform.T * first_mp * transform - mpmath.eye(4)),
                max_abs(transform.T * second_mp * transform - eigen),
            )
            if residual < mpmath.ldexp(1, -(bits // 2)):
                lambdas = tuple(
                    root.exact if root.exact is not None else root for root in roots
                )
                return DiagonalizationResult(
                    lambdas, transform, Path.CERTIFIED_NUMERIC, residual, basis_change, bits
                )
        if bits >= MAX_PRECISION_BITS:
            raise CertificationError(f"eigenbasis residual {residual} does not certify")
        LOG.debug("eigenbasis residual too large at %d bits", bits)
        bits *= 2
