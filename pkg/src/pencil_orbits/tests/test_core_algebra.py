# SPDX-FileCopyrightText: 2020-2023 CERN
# SPDX-FileCopyrightText: 2023 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

# pylint: disable = missing-function-docstring
# pylint: disable = missing-class-docstring
# pylint: disable = redefined-outer-name

"""Tests for `pencil_orbits.core_algebra`."""

import typing as t

import mpmath
import numpy as np
import pytest
import sympy as sp

from pencil_orbits.core_algebra import (
    BinaryQuartic,
    CRoot,
    S,
    SingularSubstitution,
    T,
    UndefinedJ,
    ZeroForm,
    ZeroPolynomial,
    binary_quartic_from_roots,
    complex_roots,
    gl2_substitute,
    invariants,
    j_invariant,
    quartic_roots,
    root_factors,
    root_type,
)
from pencil_orbits.errors import PreconditionError
from pencil_orbits.moduli import cross_ratio_lambda, legendre_j


def random_quartics(seed: int, count: int) -> t.Iterator[BinaryQuartic]:
    rng = np.random.default_rng(seed)
    produced = 0
    while produced < count:
        quartic = BinaryQuartic(tuple(int(c) for c in rng.integers(-9, 9, size=5, endpoint=True)))
        if root_type(quartic).is_squarefree:
            produced += 1
            yield quartic


def test_invariants_of_w_node_discriminant() -> None:
    quartic = BinaryQuartic.from_expr(-T**2 * (S + T) * (S + 2 * T) / 4)
    assert quartic.c == (0, 0, sp.Rational(-1, 4), sp.Rational(-3, 4), sp.Rational(-1, 2))
    assert root_type(quartic).partition == (2, 1, 1)
    assert invariants(quartic).Delta == 0
    assert j_invariant(quartic) == sp.oo


@pytest.mark.parametrize(
    "expr, partition",
    [
        (S * T * (S - T) * (S + T), (1, 1, 1, 1)),
        (S**2 * (S - T) * (S + T), (2, 1, 1)),
        (S**2 * T**2, (2, 2)),
        (S**3 * T, (3, 1)),
        (T**4, (4,)),
        ((S**2 + T**2) ** 2, (2, 2)),
    ],
)
def test_root_type(expr: sp.Expr, partition: t.Tuple[int, ...]) -> None:
    assert root_type(BinaryQuartic.from_expr(expr)).partition == partition


def test_root_type_of_zero_form() -> None:
    zero = BinaryQuartic((0, 0, 0, 0, 0))
    assert root_type(zero).is_zero
    with pytest.raises(ZeroForm):
        j_invariant(zero)
    with pytest.raises(ZeroForm):
        root_factors(zero)


def test_j_undefined_for_triple_root() -> None:
    with pytest.raises(UndefinedJ):
        j_invariant(BinaryQuartic.from_expr(S**3 * T))


@pytest.mark.parametrize(
    "coeffs, expected",
    [
        ((1, 0, 0, 0, 1), 1728),
        ((1, 0, 0, -1, 0), 0),
        ((0, 1, 0, -1, 0), 1728),
    ],
)
def test_j_invariant_of_cm_quartics(coeffs: t.Tuple[int, ...], expected: int) -> None:
    assert j_invariant(BinaryQuartic(coeffs)) == expected


def test_quartic_rejects_wrong_length_and_floats() -> None:
    with pytest.raises(PreconditionError):
        BinaryQuartic((1, 2, 3))
    with pytest.raises(ValueError):
        BinaryQuartic((1, 0.5, 0, 0, 1))
    with pytest.raises(PreconditionError):
        BinaryQuartic.from_expr(S**3)


def test_dehomogenize_drops_degree_at_infinity() -> None:
    quartic = binary_quartic_from_roots([0, 1, 2, sp.oo])
    assert quartic.dehomogenize().degree() == 3
    factors = root_factors(quartic)
    assert factors[0].minimal_polynomial is None
    assert factors[0].point == sp.oo
    assert sorted(factor.point for factor in factors[1:]) == [0, 1, 2]


def test_root_factors_irrational() -> None:
    quartic = BinaryQuartic.from_expr((S**2 - 2 * T**2) * S * (S - T))
    factors = root_factors(quartic)
    assert [factor.degree for factor in factors] == [1, 1, 2]
    assert not factors[2].is_rational
    with pytest.raises(PreconditionError):
        _ = factors[2].point


@pytest.mark.parametrize("seed", [1, 2])
def test_gl2_covariance(seed: int) -> None:
    # pylint: disable = invalid-name
    rng = np.random.default_rng(seed)
    checked = 0
    while checked < 100:
        quartic = BinaryQuartic(tuple(int(c) for c in rng.integers(-6, 6, size=5, endpoint=True)))
        matrix = sp.Matrix(2, 2, [int(c) for c in rng.integers(-4, 4, size=4, endpoint=True)])
        det = matrix.det()
        if det == 0:
            with pytest.raises(SingularSubstitution):
                gl2_substitute(quartic, matrix)
            continue
        before = invariants(quartic)
        after = invariants(gl2_substitute(quartic, matrix))
        assert after.I == det**4 * before.I
        assert after.J == det**6 * before.J
        assert after.Delta == det**12 * before.Delta
        checked += 1


def test_j_matches_cross_ratio() -> None:
    bits = 256
    tolerance = mpmath.ldexp(1, -128)
    for quartic in random_quartics(seed=3, count=200):
        points = [point for point, _ in quartic_roots(quartic, bits)]
        assert len(points) == 4
        expected = j_invariant(quartic)
        if not any(isinstance(point, CRoot) for point in points):
            assert legendre_j(cross_ratio_lambda(points)) == expected
            continue
        with mpmath.mp.workprec(bits):
            actual = legendre_j(cross_ratio_lambda(points))
            exact = mpmath.mpf(int(expected.p)) / int(expected.q)
            assert abs(actual - exact) <= tolerance * max(1, abs(exact))


def test_complex_roots_are_certified() -> None:
    roots = complex_roots(sp.Poly(S**2 - 2, S))
    assert [root.multiplicity for root in roots] == [1, 1]
    with mpmath.mp.workprec(256):
        for root, sign in zip(roots, (-1, 1)):
            assert abs(root.approximation - sign * mpmath.sqrt(2)) <= root.error_radius
            assert root.error_radius < mpmath.ldexp(1, -200)


def test_complex_roots_multiplicities_are_exact() -> None:
    # (u - 1)^3 (u^2 + 1), ascending coefficients
    roots = complex_roots([-1, 3, -4, 4, -3, 1])
    assert sum(root.multiplicity for root in roots) == 5
    rational = [root for root in roots if root.exact is not None]
    assert [(root.exact, root.multiplicity) for root in rational] == [(1, 3)]
    assert rational[0].error_radius == 0


def test_complex_roots_rejects_zero_and_low_precision() -> None:
    with pytest.raises(ZeroPolynomial):
        complex_roots([0, 0])
    with pytest.raises(PreconditionError):
        complex_roots([1, 1], precision_bits=8)


def test_quartic_roots_mixes_exact_and_certified() -> None:
    quartic = BinaryQuartic.from_expr(T * (S - T) * (S**2 + S * T + T**2))
    roots = quartic_roots(quartic)
    assert roots[0] == (sp.oo, 1)
    assert roots[1] == (1, 1)
    assert all(isinstance(point, CRoot) for point, _ in roots[2:])


@pytest.mark.parametrize("seed", [21, 22, 23])
def test_discriminant_vanishes_exactly_on_repeated_roots(seed: int) -> None:
    rng = np.random.default_rng(seed)
    quartics = [
        BinaryQuartic(tuple(int(c) for c in rng.integers(-4, 4, size=5, endpoint=True)))
        for _ in range(40)
    ]
    points: t.List[t.Any] = [sp.oo, *range(-3, 4)]
    for _ in range(10):
        first, second, third = (points[int(i)] for i in rng.choice(len(points), size=3, replace=False))
        quartics.append(binary_quartic_from_roots([first, first, second, third]))
    for quartic in quartics:
        if quartic.is_zero:
            continue
        assert (invariants(quartic).Delta == 0) == (not root_type(quartic).is_squarefree)


def test_complex_roots_of_cyclotomic_quartic() -> None:
    # u^4 + 1 is irreducible over ℚ; its roots are the primitive 8th roots of unity.
    roots = complex_roots([1, 0, 0, 0, 1])
    assert len(roots) == 4
    assert all(root.exact is None and root.multiplicity == 1 for root in roots)
    with mpmath.mp.workprec(256):
        expected = [mpmath.expj(mpmath.pi * (2 * k + 1) / 4) for k in range(4)]
        for root in roots:
            assert min(abs(root.approximation - value) for value in expected) <= root.error_radius


def test_complex_roots_split_off_rational_factors() -> None:
    # u^2 - 3u + 2 = (u - 1)(u - 2) is squarefree.
    roots = complex_roots([2, -3, 1])
    assert [(root.exact, root.error_radius) for root in roots] == [(1, 0), (2, 0)]
