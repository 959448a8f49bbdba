# SPDX-FileCopyrightText: 2020-2023 CERN
# SPDX-FileCopyrightText: 2023 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

# pylint: disable = missing-function-docstring
# pylint: disable = missing-class-docstring

"""Tests for `pencil_orbits.moduli`."""

import mpmath
import pytest
import sympy as sp

from pencil_orbits.core_algebra import j_invariant, quartic_roots
from pencil_orbits.moduli import (
    LAMBDA,
    AlgebraicPoint,
    CoincidentRoots,
    cross_ratio_lambda,
    fiber_structure,
    lambda_orbit,
    legendre_j,
    legendre_poles,
    legendre_quartic,
    legendre_ramification,
    riemann_hurwitz_balance,
)


def test_ramification_over_1728() -> None:
    over_1728 = [datum for datum in legendre_ramification() if datum.critical_value == 1728]
    assert [datum.critical_lambda for datum in over_1728] == [-1, sp.Rational(1, 2), 2]
    assert all(datum.index == 2 for datum in over_1728)


def test_ramification_over_0() -> None:
    over_0 = [datum for datum in legendre_ramification() if datum.critical_value == 0]
    assert len(over_0) == 2
    assert all(datum.index == 3 for datum in over_0)
    points = [datum.critical_lambda for datum in over_0]
    assert all(isinstance(point, AlgebraicPoint) for point in points)
    assert all(point.minimal_polynomial.as_expr() == LAMBDA**2 - LAMBDA + 1 for point in points)
    with mpmath.mp.workprec(128):
        for point in points:
            root = point.approximation()
            assert abs(root.approximation.real - mpmath.mpf(1) / 2) <= root.error_radius
            assert abs(legendre_j(root)) < mpmath.ldexp(1, -64)


def test_poles() -> None:
    poles = legendre_poles()
    assert [(datum.critical_lambda, datum.index) for datum in poles] == [(0, 2), (1, 2), (sp.oo, 2)]
    assert all(datum.critical_value == sp.oo for datum in poles)


def test_riemann_hurwitz() -> None:
    assert riemann_hurwitz_balance() == (10, 10)


@pytest.mark.parametrize(
    "a, multiplicity, reduced",
    [(1728, 2, 6), (0, 3, 4), (5, 1, 12), ("-3/7", 1, 12), ("oo", 1, 12)],
)
def test_fiber_structure(a: object, multiplicity: int, reduced: int) -> None:
    fiber = fiber_structure(a)
    assert fiber.multiplicity == multiplicity
    assert fiber.fiber_class_coeff == 12
    assert fiber.reduced_class_coeff == reduced


def test_cross_ratio() -> None:
    assert cross_ratio_lambda([0, 1, "oo", "5/7"]) == sp.Rational(5, 7)
    assert cross_ratio_lambda([0, -1, -2, -3]) == -3
    with pytest.raises(CoincidentRoots):
        cross_ratio_lambda([0, 1, 1, 2])
    with pytest.raises(CoincidentRoots):
        cross_ratio_lambda([0, 1, sp.oo, "oo"])
    with pytest.raises(ValueError):
        cross_ratio_lambda([0, 1, 2])


@pytest.mark.parametrize("lam", [-1, 2, 3, "1/2", "-5/3", 7])
def test_legendre_quartic_agrees_with_j_map(lam: object) -> None:
    assert j_invariant(legendre_quartic(lam)) == legendre_j(lam)


@pytest.mark.parametrize("lam", [-3, "2/5", 9])
def test_lambda_orbit_preserves_j(lam: object) -> None:
    orbit = lambda_orbit(lam)
    assert len(set(orbit)) == 6
    assert len({legendre_j(value) for value in orbit}) == 1


def test_lambda_orbit_rejects_degenerate_cross_ratio() -> None:
    with pytest.raises(CoincidentRoots):
        lambda_orbit(1)


def test_cross_ratio_of_legendre_quartic_roots() -> None:
    quartic = legendre_quartic("-5/3")
    points = [point for point, _ in quartic_roots(quartic)]
    assert legendre_j(cross_ratio_lambda(points)) == legendre_j("-5/3")
