# SPDX-FileCopyrightText: 2020-2023 CERN
# SPDX-FileCopyrightText: 2023 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Singularities of the base curve of a nodal pencil."""

from __future__ import annotations

import dataclasses
import typing as t

import sympy as sp

from ..core_algebra import DEFAULT_PRECISION_BITS
from ..pencil import COORDINATES, Pencil, SingularMember, basis_change, classify
from ._linear import nodal_basis
from ._nodal import NotNodal, tangent_member

__all__ = [
    "ARITHMETIC_GENUS",
    "NodePoint",
    "NodeReport",
    "verify_node",
]

# Genus of a smooth complete intersection of two quadrics in P³.
ARITHMETIC_GENUS = 1


@dataclasses.dataclass(frozen=True)
class NodePoint:
    """A singular point of the base curve and its local analysis.

    Attributes:
        point: Homogeneous coordinates, last nonzero entry 1.
        jacobian_rank: Rank of the 2×4 matrix with rows Q0·p, Q1·p.
        local_quadratic: Gram matrix of the quadratic term of the local
            equation in two residual coordinates.
        local_form: The same quadratic term as a polynomial.
        local_rank: Rank of *local_quadratic*.
    """

    point: t.Tuple[sp.Rational, ...]
    jacobian_rank: int
    local_quadratic: sp.ImmutableMatrix
    local_form: sp.Expr
    local_rank: int

    @property
    def is_node(self) -> bool:
        return self.jacobian_rank == 1 and self.local_rank == 2


@dataclasses.dataclass(frozen=True)
class NodeReport:
    """All singular points of the base curve of a nodal pencil.

    Attributes:
        singular_points: The vertices of singular members that lie on
            the base locus.
        candidates: Number of singular members examined.
    """

    singular_points: t.Tuple[NodePoint, ...]
    candidates: int

    @property
    def unique(self) -> bool:
        return len(self.singular_points) == 1

    @property
    def arithmetic_genus(self) -> int:
        return ARITHMETIC_GENUS

    @property
    def geometric_genus(self) -> int:
        """Genus of the normalization, if every singular point is a node."""
        return ARITHMETIC_GENUS - len(self.singular_points)


def _local_analysis(
    vertex: sp.Matrix, cone: sp.MatrixBase, smooth: sp.MatrixBase
) -> t.Tuple[sp.ImmutableMatrix, sp.Expr, int]:
    # Near p, the curve lies on the smooth quadric with tangent plane
    # (Bp)^⊥. Solving its equation for the normal direction only adds
    # terms of order 2 to the point, and the cone satisfies A·p = 0, so
    # the quadratic term is A restricted to (Bp)^⊥ modulo p.
    tangent = (smooth * vertex).T.nullspace()
    chosen: t.List[sp.Matrix] = []
    for vector in tangent:
        if sp.Matrix.hstack(vertex, *chosen, vector).rank() == len(chosen) + 2:
            chosen.append(vector)
        if len(chosen) == 2:
            break
    frame = sp.Matrix.hstack(*chosen)
    gram = sp.ImmutableMatrix(frame.T * cone * frame)
    names = []
    for index, vector in enumerate(chosen):
        unit = [i for i, entry in enumerate(vector) if entry != 0]
        if len(unit) == 1 and vector[unit[0]] == 1:
            names.append(COORDINATES[unit[0]])
        else:
            names.append(sp.Symbol(f"y{index + 1}"))
    local = sp.Matrix(names)
    return gram, sp.expand((local.T * gram * local)[0, 0]), gram.rank()


def verify_node(pencil: Pencil, precision_bits: int = DEFAULT_PRECISION_BITS) -> NodeReport:
    """Locate and analyse the singular points of the base curve.

    A point p of the base curve is singular iff Q0·p and Q1·p are
    linearly dependent, i.e. iff p is the vertex of a singular member
    and lies on the base locus. At such a vertex, the local equation is
    obtained by eliminating the normal direction of the nonsingular
    member; the point is an ordinary node iff the resulting quadratic
    term has rank 2 in the two remaining coordinates.

    Raises:
        NotNodal: if the pencil is not in the nodal stratum.

    Examples:

        >>> from pencil_orbits.normal_forms import W_NODE
        >>> report = verify_node(W_NODE)
        >>> [node.point for node in report.singular_points]
        [(0, 0, 0, 1)]
        >>> report.singular_points[0].local_form
        x1**2 + x2**2
        >>> report.unique, report.singular_points[0].is_node, report.geometric_genus
        (True, True, 0)
    """
    tangent = tangent_member(pencil, precision_bits)
    members = classify(pencil, precision_bits).diagnostics
    smooth = basis_change(pencil, nodal_basis(pencil, tangent)).Q1
    points = []
    for member in members:
        if not member.vertex_on_base_locus:
            continue
        if not member.is_rational:
            raise NotNodal("a vertex on the base locus at an irrational root")
        points.append(_node_point(pencil, member, smooth))
    return NodeReport(tuple(points), len(members))


def _node_point(pencil: Pencil, member: SingularMember, smooth: sp.MatrixBase) -> NodePoint:
    vertex = sp.Matrix(t.cast(t.Tuple[sp.Rational, ...], member.vertex))
    jacobian = sp.Matrix.hstack(pencil.Q0 * vertex, pencil.Q1 * vertex).T
    cone = pencil.member(*t.cast(t.Tuple[sp.Rational, sp.Rational], member.root))
    gram, form, rank = _local_analysis(vertex, cone, smooth)
    return NodePoint(tuple(vertex), jacobian.rank(), gram, form, rank)
