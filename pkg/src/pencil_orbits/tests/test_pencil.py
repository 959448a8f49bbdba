# SPDX-FileCopyrightText: 2020-2023 CERN
# SPDX-FileCopyrightText: 2023 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

# pylint: disable = missing-function-docstring
# pylint: disable = missing-class-docstring
# pylint: disable = redefined-outer-name

"""Tests for `pencil_orbits.pencil`."""

import typing as t

import numpy as np
import pytest
import sympy as sp

from pencil_orbits.core_algebra import SingularSubstitution, root_type
from pencil_orbits.pencil import (
    AsymmetricMatrix,
    DependentPencil,
    LineInD,
    OrbitTag,
    Pencil,
    SingularGroupElement,
    basis_change,
    classify,
    congruence_act,
    discriminant_quartic,
    infinitesimal_stabilizer_dim,
    pencil_from_forms,
    singular_members,
)


@pytest.fixture
def w_node() -> Pencil:
    return pencil_from_forms("x0**2 + x1**2 + x2**2", "x0*x3 + x1**2 + 2*x2**2")


def random_symmetric(rng: np.random.Generator, height: int = 5) -> sp.Matrix:
    entries = rng.integers(-height, height, size=(4, 4), endpoint=True)
    return sp.Matrix(4, 4, lambda i, j: int(entries[min(i, j), max(i, j)]))


def random_group_element(rng: np.random.Generator) -> sp.Matrix:
    while True:
        g = sp.Matrix(4, 4, [int(c) for c in rng.integers(-3, 3, size=16, endpoint=True)])
        if g.det() != 0:
            return g


def random_smooth_pencils(seed: int, count: int) -> t.Iterator[Pencil]:
    rng = np.random.default_rng(seed)
    produced = 0
    while produced < count:
        first, second = random_symmetric(rng), random_symmetric(rng)
        try:
            pencil = Pencil(first, second)
        except DependentPencil:
            continue
        if root_type(discriminant_quartic(pencil)).is_squarefree:
            produced += 1
            yield pencil


def test_w_node_discriminant(w_node: Pencil) -> None:
    quartic = discriminant_quartic(w_node)
    assert quartic.c == (0, 0, sp.Rational(-1, 4), sp.Rational(-3, 4), sp.Rational(-1, 2))


def test_pencil_rejects_bad_generators() -> None:
    with pytest.raises(AsymmetricMatrix):
        Pencil(sp.Matrix(4, 4, range(16)), sp.eye(4))
    with pytest.raises(DependentPencil):
        Pencil(sp.eye(4), 3 * sp.eye(4))
    with pytest.raises(DependentPencil):
        Pencil(sp.zeros(4, 4), sp.eye(4))


def test_pencil_from_forms_rejects_non_quadratic() -> None:
    with pytest.raises(ValueError):
        pencil_from_forms("x0**3", "x1**2")
    with pytest.raises(ValueError):
        pencil_from_forms("x0 + x1**2", "x1**2")


def test_congruence_scales_discriminant(w_node: Pencil) -> None:
    g = sp.diag(2, 3, 5, 7)
    image = discriminant_quartic(congruence_act(g, w_node))
    assert image == discriminant_quartic(w_node).scaled(g.det() ** 2)
    with pytest.raises(SingularGroupElement):
        congruence_act(sp.diag(1, 1, 1, 0), w_node)


def test_basis_change_rejects_singular_matrix(w_node: Pencil) -> None:
    with pytest.raises(SingularSubstitution):
        basis_change(w_node, [[1, 2], [2, 4]])


def test_classify_smooth() -> None:
    verdict = classify(pencil_from_forms("x0**2 + x1**2 + x2**2 + x3**2", "x0**2 - x1**2 + 2*x2**2"))
    assert verdict.tag is OrbitTag.SMOOTH_FIBER
    assert verdict.root_type.is_squarefree
    assert len(verdict.diagnostics) == 4
    assert all(member.rank == 3 and not member.vertex_on_base_locus for member in verdict.diagnostics)
    assert verdict.j is not None


def test_classify_nodal(w_node: Pencil) -> None:
    verdict = classify(w_node)
    assert verdict.tag is OrbitTag.NODAL_STRATUM
    assert verdict.j is None
    assert str(verdict.root_type) == "2+1+1"
    double = next(member for member in verdict.diagnostics if member.multiplicity == 2)
    assert double.root == (1, 0)
    assert double.rank == 3
    assert double.vertex == (0, 0, 0, 1)
    assert double.vertex_on_base_locus


def test_classify_deeper_strata() -> None:
    two_two = classify(pencil_from_forms("x0**2 + x1**2", "x2**2 + x3**2"))
    assert two_two.tag is OrbitTag.DEEPER_STRATUM
    assert two_two.root_type.partition == (2, 2)
    # a double root whose member has rank 2 is not nodal
    rank_two = classify(pencil_from_forms("x0**2 + x1**2 + x2**2 + x3**2", "x2**2 + 2*x3**2"))
    assert rank_two.root_type.partition == (2, 1, 1)
    assert rank_two.tag is OrbitTag.DEEPER_STRATUM


def test_classify_line_in_determinant_hypersurface() -> None:
    pencil = pencil_from_forms("x0*x1", "x0*x2")
    verdict = classify(pencil)
    assert verdict.tag is OrbitTag.LINE_IN_D
    assert verdict.root_type.is_zero
    assert verdict.diagnostics == ()
    with pytest.raises(LineInD):
        singular_members(pencil)


def test_singular_members_at_irrational_roots() -> None:
    second = sp.diag(sp.Matrix([[1, 1], [1, -1]]), 3, 4)
    members = singular_members(Pencil(sp.eye(4), second))
    assert len(members) == 4
    assert all(member.rank == 3 for member in members)
    irrational = [member for member in members if not member.is_rational]
    assert len(irrational) == 2
    assert all(member.minimal_polynomial.degree() == 2 for member in irrational)
    assert all(member.vertex is None for member in irrational)


@pytest.mark.parametrize("seed", [11, 12, 13, 14, 15])
def test_classification_is_invariant(seed: int) -> None:
    rng = np.random.default_rng(seed)
    for _ in range(20):
        while True:
            try:
                pencil = Pencil(random_symmetric(rng), random_symmetric(rng))
                break
            except DependentPencil:
                continue
        g = random_group_element(rng)
        while True:
            m = sp.Matrix(2, 2, [int(c) for c in rng.integers(-3, 3, size=4, endpoint=True)])
            if m.det() != 0:
                break
        before = classify(pencil)
        after = classify(congruence_act(g, basis_change(pencil, m)))
        assert after.tag is before.tag
        assert after.root_type == before.root_type
        assert after.j == before.j


def test_stabilizer_of_smooth_pencils() -> None:
    for pencil in random_smooth_pencils(seed=5, count=25):
        report = infinitesimal_stabilizer_dim(pencil)
        assert report.lie_algebra_dim == 0
        assert report.orbit_dim == 15


def test_stabilizer_of_w_node(w_node: Pencil) -> None:
    assert infinitesimal_stabilizer_dim(w_node).lie_algebra_dim == 0


def test_stabilizer_of_degenerate_pencil() -> None:
    report = infinitesimal_stabilizer_dim(pencil_from_forms("x0*x1", "x0*x2"))
    assert report.lie_algebra_dim >= 1


@pytest.mark.parametrize("seed", [41, 42])
def test_stabilizer_dimension_is_invariant(w_node: Pencil, seed: int) -> None:
    rng = np.random.default_rng(seed)
    pencils = [
        w_node,
        pencil_from_forms("x0*x1", "x0*x2"),
        pencil_from_forms("x0**2 + x1**2", "x2**2 + x3**2"),
        *random_smooth_pencils(seed, count=3),
    ]
    m = sp.Matrix([[1, 2], [1, 3]])
    for pencil in pencils:
        before = infinitesimal_stabilizer_dim(pencil).lie_algebra_dim
        g = random_group_element(rng)
        assert infinitesimal_stabilizer_dim(congruence_act(g, pencil)).lie_algebra_dim == before
        moved = congruence_act(g, basis_change(pencil, m))
        assert infinitesimal_stabilizer_dim(moved).lie_algebra_dim == before
