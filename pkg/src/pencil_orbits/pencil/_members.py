# SPDX-FileCopyrightText: 2020-2023 CERN
# SPDX-FileCopyrightText: 2023 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Singular members of a pencil and the orbit classification."""

from __future__ import annotations

import dataclasses
import enum
import itertools
import typing as t
from logging import getLogger

import sympy as sp

from ..core_algebra import (
    DEFAULT_PRECISION_BITS,
    CRoot,
    RootFactor,
    RootType,
    X,
    complex_roots,
    j_invariant,
    root_factors,
    root_type,
)
from ..errors import PreconditionError
from ..utils.typecheck import ProjectiveValue
from ._pencil import Pencil, discriminant_quartic

__all__ = [
    "LineInD",
    "OrbitClass",
    "OrbitTag",
    "SingularMember",
    "classify",
    "singular_members",
]

LOG = getLogger(__name__)


class LineInD(PreconditionError):
    """Every member of the pencil is singular."""


@dataclasses.dataclass(frozen=True)
class SingularMember:
    """A singular quadric s₀Q0 + t₀Q1 of a pencil.

    Attributes:
        root: The root (s₀, t₀) of the discriminant if it is rational;
            otherwise a certified approximation of x = s₀/t₀.
        multiplicity: Multiplicity of the root in the discriminant.
        rank: Exact rank of the member.
        vertex_on_base_locus: For rank 3, whether the kernel vector
            lies on both quadrics. Always False for lower ranks.
        vertex: The kernel vector of a rank-3 member at a rational
            root, None otherwise.
        minimal_polynomial: The irreducible factor of det(x·Q0 + Q1)
            over ℚ that the root belongs to; None at (1:0).
    """

    root: t.Union[t.Tuple[sp.Rational, sp.Rational], CRoot]
    multiplicity: int
    rank: int
    vertex_on_base_locus: bool
    vertex: t.Optional[t.Tuple[sp.Rational, ...]] = None
    minimal_polynomial: t.Optional[sp.Poly] = None

    @property
    def is_rational(self) -> bool:
        return not isinstance(self.root, CRoot)


class OrbitTag(enum.Enum):
    """Coarse position of a pencil relative to the determinant hypersurface."""

    SMOOTH_FIBER = "SmoothFiber"
    NODAL_STRATUM = "NodalStratum"
    DEEPER_STRATUM = "DeeperStratum"
    LINE_IN_D = "LineInD"


@dataclasses.dataclass(frozen=True)
class OrbitClass:
    """The classification verdict of a pencil.

    Attributes:
        tag: Which stratum the pencil lies in.
        j: The j-invariant of the discriminant; present iff *tag* is
            `OrbitTag.SMOOTH_FIBER`.
        root_type: Root multiplicities of the discriminant.
        diagnostics: All singular members (empty for `OrbitTag.LINE_IN_D`).
    """

    tag: OrbitTag
    j: t.Optional[ProjectiveValue]
    root_type: RootType
    diagnostics: t.Tuple[SingularMember, ...] = ()


def _normalize(vector: t.Sequence[sp.Rational]) -> t.Tuple[sp.Rational, ...]:
    """Scale a nonzero vector so that its last nonzero entry is 1."""
    pivot = next(entry for entry in reversed(vector) if entry != 0)
    return tuple(entry / pivot for entry in vector)


def _rational_member(pencil: Pencil, factor: RootFactor) -> SingularMember:
    s_value, t_value = factor.homogeneous_point
    matrix = pencil.member(s_value, t_value)
    rank = matrix.rank()
    vertex = None
    on_base_locus = False
    if rank == 3:
        kernel = matrix.nullspace()[0]
        vertex = _normalize(list(kernel))
        on_base_locus = all(
            (kernel.T * quadric * kernel)[0, 0] == 0 for quadric in (pencil.Q0, pencil.Q1)
        )
    return SingularMember(
        (s_value, t_value),
        factor.multiplicity,
        rank,
        on_base_locus,
        vertex,
        factor.minimal_polynomial,
    )


def rank_modulo(matrix: sp.MatrixBase, modulus: sp.Poly) -> int:
    """Exact rank of a matrix over ℚ[x]/(m) for irreducible m.

    The entries of *matrix* are polynomials in `X`. The rank is the
    largest k such that some k×k minor does not vanish modulo m.
    """
    rows, cols = matrix.shape
    for size in range(min(rows, cols), 0, -1):
        for row_idx in itertools.combinations(range(rows), size):
            for col_idx in itertools.combinations(range(cols), size):
                minor = matrix.extract(list(row_idx), list(col_idx)).det(method="berkowitz")
                if not sp.Poly(minor, X, domain=sp.QQ).rem(modulus).is_zero:
                    return size
    return 0


def kernel_modulo(matrix: sp.MatrixBase, modulus: sp.Poly) -> t.List[sp.Poly]:
    """Return a kernel vector of a rank-3 4×4 matrix over ℚ[x]/(m).

    Any column of the adjugate that does not vanish modulo m will do,
    since A·adj(A) = det(A)·I ≡ 0.
    """
    adjugate = matrix.adjugate(method="berkowitz")
    for col in range(4):
        column = [sp.Poly(adjugate[row, col], X, domain=sp.QQ).rem(modulus) for row in range(4)]
        if any(not entry.is_zero for entry in column):
            return column
    raise PreconditionError("matrix has rank below 3 modulo the minimal polynomial")


def _quadric_value_modulo(
    quadric: sp.MatrixBase, vector: t.Sequence[sp.Poly], modulus: sp.Poly
) -> sp.Poly:
    total = sp.Poly(0, X, domain=sp.QQ)
    for i in range(4):
        for j in range(4):
            if quadric[i, j] != 0:
                total += vector[i] * vector[j] * quadric[i, j]
    return total.rem(modulus)


def _irrational_members(
    pencil: Pencil, factor: RootFactor, precision_bits: int
) -> t.List[SingularMember]:
    modulus = t.cast(sp.Poly, factor.minimal_polynomial)
    matrix = pencil.member(X, 1)
    rank = rank_modulo(matrix, modulus)
    on_base_locus = False
    if rank == 3:
        kernel = kernel_modulo(matrix, modulus)
        on_base_locus = all(
            _quadric_value_modulo(quadric, kernel, modulus).is_zero
            for quadric in (pencil.Q0, pencil.Q1)
        )
    # Galois conjugates share rank and base-locus incidence.
    return [
        SingularMember(root, factor.multiplicity, rank, on_base_locus, None, modulus)
        for root in complex_roots(modulus, precision_bits)
    ]


def singular_members(
    pencil: Pencil, precision_bits: int = DEFAULT_PRECISION_BITS
) -> t.List[SingularMember]:
    """Return one entry per distinct root of the discriminant.

    Ranks are exact: at rational roots by evaluating the member, at
    irrational roots by working modulo the root's minimal polynomial.
    Certified numerics only provide the approximate location of
    irrational roots.

    Raises:
        LineInD: if the discriminant vanishes identically.
    """
    quartic = discriminant_quartic(pencil)
    if quartic.is_zero:
        raise LineInD(f"every member of {pencil} is singular")
    members: t.List[SingularMember] = []
    for factor in root_factors(quartic):
        if factor.is_rational:
            members.append(_rational_member(pencil, factor))
        else:
            members.extend(_irrational_members(pencil, factor, precision_bits))
    return members


def classify(pencil: Pencil, precision_bits: int = DEFAULT_PRECISION_BITS) -> OrbitClass:
    """Classify *pencil* by its discriminant and its singular members.

    Examples:

        >>> from pencil_orbits.pencil import pencil_from_forms
        >>> w_node = pencil_from_forms("x0**2 + x1**2 + x2**2", "x0*x3 + x1**2 + 2*x2**2")
        >>> classify(w_node).tag
        <OrbitTag.NODAL_STRATUM: 'NodalStratum'>
        >>> classify(pencil_from_forms("x0*x1", "x0*x2")).tag
        <OrbitTag.LINE_IN_D: 'LineInD'>
    """
    quartic = discriminant_quartic(pencil)
    roots = root_type(quartic)
    if roots.is_zero:
        return OrbitClass(OrbitTag.LINE_IN_D, None, roots)
    members = tuple(singular_members(pencil, precision_bits))
    if roots.is_squarefree:
        assert not any(
            member.rank == 3 and member.vertex_on_base_locus for member in members
        ), f"smooth pencil {pencil} has a vertex on its base locus"
        return OrbitClass(OrbitTag.SMOOTH_FIBER, j_invariant(quartic), roots, members)
    if roots.partition == (2, 1, 1):
        double = next(member for member in members if member.multiplicity == 2)
        if double.rank == 3:
            assert double.vertex_on_base_locus, f"tangent vertex off the base locus of {pencil}"
            return OrbitClass(OrbitTag.NODAL_STRATUM, None, roots, members)
    LOG.debug("pencil %s lies in a deeper stratum (root type %s)", pencil, roots)
    return OrbitClass(OrbitTag.DEEPER_STRATUM, None, roots, members)
