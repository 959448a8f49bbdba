# SPDX-FileCopyrightText: 2020-2023 CERN
# SPDX-FileCopyrightText: 2023 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""The Legendre λ-line and the j-map on it.

The map λ ↦ j(λ) = 256·(λ² − λ + 1)³ / (λ²(λ − 1)²) has degree 6. Its
only finite branch values are 1728 (index 2 at λ = −1, 1/2, 2) and 0
(index 3 at the roots of λ² − λ + 1). Over ∞ it has the three double
poles λ = 0, 1, ∞. These indices are not hard-coded: they are computed
by exact orders of vanishing, over ℚ or over ℚ[λ]/(λ² − λ + 1).
"""

from __future__ import annotations

import dataclasses
import functools
import itertools
import typing as t
from logging import getLogger

import mpmath
import sympy as sp

from .core_algebra import BinaryQuartic, CRoot, S, T, complex_roots
from .errors import CertificationError, PreconditionError
from .utils.coerce_rational import coerce_rational
from .utils.typecheck import ProjectiveValue, is_infinity

__all__ = [
    "AlgebraicPoint",
    "CoincidentRoots",
    "FIBER_CLASS_COEFF",
    "FiberStructure",
    "LAMBDA",
    "RamificationDatum",
    "cross_ratio_lambda",
    "fiber_structure",
    "lambda_orbit",
    "legendre_j",
    "legendre_poles",
    "legendre_quartic",
    "legendre_ramification",
    "riemann_hurwitz_balance",
]

LOG = getLogger(__name__)

LAMBDA = sp.Symbol("lambda")

_NUMERATOR = sp.Poly(256 * (LAMBDA**2 - LAMBDA + 1) ** 3, LAMBDA, domain=sp.QQ)
_DENOMINATOR = sp.Poly(LAMBDA**2 * (LAMBDA - 1) ** 2, LAMBDA, domain=sp.QQ)

# Every divisorial fiber of the j-map on smooth pencils has class 12σ₁.
FIBER_CLASS_COEFF = 12

# Multiplicities of the fibers over the CM values, established below.
_CM_MULTIPLICITIES = {sp.Integer(1728): 2, sp.Integer(0): 3}


class CoincidentRoots(PreconditionError):
    """Two of the four points of a cross-ratio coincide."""


@dataclasses.dataclass(frozen=True)
class AlgebraicPoint:
    """A root of an irreducible polynomial over ℚ.

    Attributes:
        minimal_polynomial: Monic, irreducible.
        root_index: Position of the root among all roots, sorted by
            real, then imaginary part.
    """

    minimal_polynomial: sp.Poly
    root_index: int

    def approximation(self) -> CRoot:
        return complex_roots(self.minimal_polynomial)[self.root_index]


CriticalPoint = t.Union[sp.Rational, AlgebraicPoint, ProjectiveValue]


@dataclasses.dataclass(frozen=True)
class RamificationDatum:
    """A ramification point of λ ↦ j(λ).

    Attributes:
        critical_lambda: The point on the λ-line.
        critical_value: Its image j(λ).
        index: Order of vanishing of j − j(λ) at the point, or pole
            order over ∞.
    """

    critical_lambda: CriticalPoint
    critical_value: ProjectiveValue
    index: int


@dataclasses.dataclass(frozen=True)
class FiberStructure:
    """Multiplicity of the fiber of the j-map over *a*.

    Attributes:
        a: A point of the j-line.
        multiplicity: 2 over 1728, 3 over 0, else 1.
        fiber_class_coeff: The fiber is 12σ₁ in the Chow ring.
        reduced_class_coeff: Coefficient of the reduced fiber.
    """

    a: ProjectiveValue
    multiplicity: int
    fiber_class_coeff: int = FIBER_CLASS_COEFF

    @property
    def reduced_class_coeff(self) -> int:
        return self.fiber_class_coeff // self.multiplicity


def _to_projective(value: t.Any) -> ProjectiveValue:
    if is_infinity(value) or value == "oo":
        return sp.oo
    return coerce_rational(value)


def legendre_j(value: t.Any) -> t.Any:
    """Evaluate j(λ) = 256·(λ² − λ + 1)³ / (λ²(λ − 1)²).

    Exact values (rationals and ∞) give exact results, with j = ∞ at
    λ ∈ {0, 1, ∞}. mpmath numbers and `CRoot` values give mpmath
    numbers at the current precision.

    Examples:

        >>> legendre_j(-1), legendre_j(2), legendre_j(0)
        (1728, 1728, oo)
        >>> legendre_j("1/2")
        1728
    """
    if isinstance(value, CRoot):
        value = value.approximation
    if isinstance(value, (mpmath.mpf, mpmath.mpc)):
        return 256 * (value**2 - value + 1) ** 3 / (value**2 * (value - 1) ** 2)
    lam = _to_projective(value)
    if is_infinity(lam):
        return sp.oo
    denominator = _DENOMINATOR.eval(lam)
    if denominator == 0:
        return sp.oo
    return _NUMERATOR.eval(lam) / denominator


def _order_of_vanishing(poly: sp.Poly, factor: sp.Poly) -> int:
    order = 0
    while not poly.is_zero and poly.rem(factor).is_zero:
        poly = poly.exquo(factor)
        order += 1
    return order


def _value_at(factor: sp.Poly) -> ProjectiveValue:
    """Evaluate j at a root of *factor*, exactly in ℚ[λ]/(factor)."""
    denominator = _DENOMINATOR.rem(factor)
    if denominator.is_zero:
        return sp.oo
    inverse = sp.invert(denominator.as_expr(), factor.as_expr(), LAMBDA)
    value = sp.Poly(_NUMERATOR.as_expr() * inverse, LAMBDA, domain=sp.QQ).rem(factor)
    if value.degree() > 0:
        raise CertificationError(f"j is not rational at the roots of {factor.as_expr()}")
    return value.LC() if not value.is_zero else sp.Integer(0)


def _points_of(factor: sp.Poly) -> t.List[CriticalPoint]:
    if factor.degree() == 1:
        lead, const = factor.all_coeffs()
        return [-const / lead]
    monic = factor.monic()
    return [AlgebraicPoint(monic, index) for index in range(monic.degree())]


@functools.lru_cache(maxsize=None)
def legendre_ramification() -> t.Tuple[RamificationDatum, ...]:
    """Return the critical points of j with finite critical values.

    The critical points are the roots of the numerator of j′, factored
    over ℚ. Each index is the exact order of vanishing of
    N(λ) − c·D(λ) along the corresponding irreducible factor, where
    j = N/D and c is the critical value.

    Examples:

        >>> [(d.critical_lambda, d.critical_value, d.index) for d in legendre_ramification()[:3]]
        [(-1, 1728, 2), (1/2, 1728, 2), (2, 1728, 2)]
    """
    j_expr = _NUMERATOR.as_expr() / _DENOMINATOR.as_expr()
    numerator, _ = sp.fraction(sp.cancel(sp.diff(j_expr, LAMBDA)))
    _, factors = sp.Poly(numerator, LAMBDA, domain=sp.QQ).factor_list()
    data = []
    for factor, _ in sorted(factors, key=lambda item: (item[0].degree(), item[0].all_coeffs())):
        value = _value_at(factor)
        if is_infinity(value):
            continue
        index = _order_of_vanishing(_NUMERATOR - _DENOMINATOR * value, factor)
        if index < 2:
            raise CertificationError(f"critical factor {factor.as_expr()} is unramified")
        data.extend(RamificationDatum(point, value, index) for point in _points_of(factor))
    LOG.debug("ramification of the j-map: %s", data)
    return tuple(
        sorted(data, key=lambda datum: (not isinstance(datum.critical_lambda, sp.Rational), _sort_key(datum)))
    )


def _sort_key(datum: RamificationDatum) -> t.Tuple[t.Any, ...]:
    point = datum.critical_lambda
    if isinstance(point, AlgebraicPoint):
        return (point.minimal_polynomial.all_coeffs(), point.root_index)
    return (point,)


@functools.lru_cache(maxsize=None)
def legendre_poles() -> t.Tuple[RamificationDatum, ...]:
    """Return the points over j = ∞ with their pole orders.

    Examples:

        >>> [(d.critical_lambda, d.index) for d in legendre_poles()]
        [(0, 2), (1, 2), (oo, 2)]
    """
    data = []
    _, factors = _DENOMINATOR.factor_list()
    for factor, order in factors:
        data.extend(RamificationDatum(point, sp.oo, order) for point in _points_of(factor))
    data.sort(key=lambda datum: datum.critical_lambda)
    at_infinity = _NUMERATOR.degree() - _DENOMINATOR.degree()
    if at_infinity > 0:
        data.append(RamificationDatum(sp.oo, sp.oo, at_infinity))
    return tuple(data)


def riemann_hurwitz_balance() -> t.Tuple[int, int]:
    """Return Σ(e − 1) over all ramification points and 2·deg − 2.

    For a map P¹ → P¹ of degree d, Riemann–Hurwitz demands that both
    agree; the j-map has d = 6 and total ramification 10.
    """
    degree = max(_NUMERATOR.degree(), _DENOMINATOR.degree())
    total = sum(datum.index - 1 for datum in legendre_ramification() + legendre_poles())
    return total, 2 * degree - 2


@functools.lru_cache(maxsize=None)
def _checked_multiplicities() -> t.Dict[sp.Rational, int]:
    computed: t.Dict[sp.Rational, int] = {}
    for datum in legendre_ramification():
        value = t.cast(sp.Rational, datum.critical_value)
        computed[value] = max(computed.get(value, 1), datum.index)
    if computed != _CM_MULTIPLICITIES:
        raise CertificationError(
            f"fiber multiplicities {_CM_MULTIPLICITIES} disagree with ramification {computed}"
        )
    return computed


def fiber_structure(a: t.Any) -> FiberStructure:
    """Return the multiplicity of the fiber of the j-map over *a*.

    The table is cross-checked once against `legendre_ramification`.

    Examples:

        >>> [fiber_structure(a).reduced_class_coeff for a in (1728, 0, 5, "oo")]
        [6, 4, 12, 12]
    """
    value = _to_projective(a)
    multiplicity = 1 if is_infinity(value) else _checked_multiplicities().get(value, 1)
    return FiberStructure(value, multiplicity)


def _homogeneous(value: t.Any) -> t.Tuple[t.Any, t.Any]:
    if is_infinity(value) or value == "oo":
        return (sp.Integer(1), sp.Integer(0))
    if isinstance(value, CRoot):
        return (value.approximation, sp.Integer(1))
    if isinstance(value, (mpmath.mpf, mpmath.mpc)):
        return (value, sp.Integer(1))
    return (coerce_rational(value), sp.Integer(1))


def _det(first: t.Tuple[t.Any, t.Any], second: t.Tuple[t.Any, t.Any]) -> t.Any:
    return first[0] * second[1] - first[1] * second[0]


def _check_distinct(values: t.Sequence[t.Any]) -> None:
    for first, second in itertools.combinations(values, 2):
        if isinstance(first, CRoot) or isinstance(second, CRoot):
            radii = sum(v.error_radius for v in (first, second) if isinstance(v, CRoot))
            lhs, rhs = _homogeneous(first), _homogeneous(second)
            if lhs[1] == 0 or rhs[1] == 0:
                continue
            if abs(_as_mp(lhs[0]) - _as_mp(rhs[0])) <= radii:
                raise CoincidentRoots("certified disks of two roots overlap")
        elif _det(_homogeneous(first), _homogeneous(second)) == 0:
            raise CoincidentRoots(f"{first} and {second} coincide")


def cross_ratio_lambda(roots: t.Sequence[t.Any]) -> t.Any:
    """Send the first three points to 0, 1, ∞ and return the image of the fourth.

    With points as (p : q), this is
    det(z, r₁)·det(r₂, r₃) / (det(z, r₃)·det(r₂, r₁)). The result is exact
    when all inputs are exact (rationals or ∞), an mpmath number
    otherwise.

    Raises:
        CoincidentRoots: if two of the points coincide.

    Examples:

        >>> cross_ratio_lambda([0, 1, "oo", "5/7"])
        5/7
        >>> cross_ratio_lambda([0, -1, -2, -3])
        -3
    """
    if len(roots) != 4:
        raise PreconditionError(f"expected 4 points, got {len(roots)}")
    _check_distinct(roots)
    numeric = [root for root in roots if isinstance(root, (CRoot, mpmath.mpf, mpmath.mpc))]
    bits = max(
        (root.precision_bits for root in numeric if isinstance(root, CRoot)),
        default=mpmath.mp.prec,
    )
    with mpmath.mp.workprec(bits):
        first, second, third, fourth = (_homogeneous(root) for root in roots)
        if numeric:
            first, second, third, fourth = (
                tuple(_as_mp(x) for x in point) for point in (first, second, third, fourth)
            )
        return (_det(fourth, first) * _det(second, third)) / (
            _det(fourth, third) * _det(second, first)
        )


def _as_mp(value: t.Any) -> t.Any:
    if isinstance(value, sp.Rational):
        return mpmath.mpf(int(value.p)) / int(value.q)
    if isinstance(value, int):
        return mpmath.mpf(value)
    return value


def legendre_quartic(value: t.Any) -> BinaryQuartic:
    """Return f_λ = st(s − t)(s − λt), with roots 0, 1, ∞ and λ.

    Examples:

        >>> print(legendre_quartic(-1))
        s**3*t - s*t**3
    """
    lam = coerce_rational(value)
    return BinaryQuartic.from_expr(S * T * (S - T) * (S - lam * T))


def lambda_orbit(value: t.Any) -> t.Tuple[sp.Rational, ...]:
    """Return the six λ-values of the same four points under relabelling.

    Examples:

        >>> lambda_orbit(-3)
        (-3, -1/3, 4, 1/4, 3/4, 4/3)
    """
    lam = coerce_rational(value)
    if lam in (0, 1):
        raise CoincidentRoots(f"λ = {lam} is a degenerate cross-ratio")
    return (lam, 1 / lam, 1 - lam, 1 / (1 - lam), lam / (lam - 1), (lam - 1) / lam)
