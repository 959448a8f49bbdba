# SPDX-FileCopyrightText: 2020-2023 CERN
# SPDX-FileCopyrightText: 2023 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Restriction of the determinant quartic to a plane in P⁹.

A plane Π ⊂ P⁹ meets the determinant hypersurface in a plane quartic
curve C. Lines of Π through a point q ∉ C form a P¹; each line is a
pencil whose discriminant is a binary quartic f_u. The line is tangent
to C exactly where f_u has a repeated root, i.e. where Δ(f_u) = 0.

The P¹ of lines is covered by two affine charts sharing the parameter
`U`: chart 0 has directions p₀ + u·p₁, chart 1 has u·p₀ + p₁. The
chart-1 family is read off chart 0 by reversing the coefficient of tᵏ
in degree k. Since Δ has weight 12, the chart-1 discriminant is then
the degree-12 reversal of the chart-0 one.
"""

from __future__ import annotations

import dataclasses
import functools
import typing as t
from logging import getLogger

import numpy as np
import sympy as sp

from ..core_algebra import U, S, T, weighted_invariants
from ..errors import CertificationError, PreconditionError
from ..pencil import Pencil, SymMat4, sym_mat4, upper_triangle
from ..utils.coerce_rational import coerce_rational, coerce_rational_tuple
from ..utils.typecheck import is_infinity

__all__ = [
    "DEFAULT_HEIGHT",
    "GenericityExhausted",
    "InvalidSlice",
    "PlaneSlice",
    "PoleValue",
    "RETRY_BOUND",
    "SliceInvariants",
    "SliceReport",
    "count_tangents",
    "expected_tangent_count",
    "generic_slice",
    "genericity_failures",
    "j_fiber_count",
    "random_slice",
    "slice_invariants",
    "slice_report",
    "tangent_pencil",
    "tangent_polynomial",
]

LOG = getLogger(__name__)

RETRY_BOUND = 32
DEFAULT_HEIGHT = 10

# Weight of the discriminant of a binary quartic.
DISCRIMINANT_WEIGHT = 12


class InvalidSlice(PreconditionError):
    """The plane is degenerate or the point lies on the curve."""


class PoleValue(PreconditionError):
    """j = ∞ has no fiber polynomial; count tangents instead."""


class GenericityExhausted(CertificationError):
    """No generic slice was found within the retry bound."""


@dataclasses.dataclass(frozen=True)
class PlaneSlice:
    """A plane Π ⊂ P⁹ with a point q ∈ Π.

    Attributes:
        span: Three symmetric matrices spanning Π.
        q_coeffs: Coordinates of q with respect to *span*.
        seed: Seed this slice was sampled from, if any.

    Raises:
        InvalidSlice: if *span* has rank less than 3 or det M(q) = 0.
    """

    span: t.Tuple[SymMat4, SymMat4, SymMat4]
    q_coeffs: t.Tuple[sp.Rational, sp.Rational, sp.Rational]
    seed: t.Optional[int] = None

    def __post_init__(self) -> None:
        span = tuple(sym_mat4(matrix) for matrix in self.span)
        q_coeffs = coerce_rational_tuple(self.q_coeffs)
        if len(span) != 3 or len(q_coeffs) != 3:
            raise InvalidSlice(
                f"need three matrices and three coordinates, got {len(span)} and {len(q_coeffs)}"
            )
        object.__setattr__(self, "span", span)
        object.__setattr__(self, "q_coeffs", q_coeffs)
        if sp.Matrix([upper_triangle(matrix) for matrix in span]).rank() != 3:
            raise InvalidSlice("span matrices are linearly dependent")
        if self.matrix_at(q_coeffs).det(method="berkowitz") == 0:
            raise InvalidSlice(f"q = {list(q_coeffs)!r} lies on the determinant curve")

    def matrix_at(self, coeffs: t.Sequence[t.Any]) -> sp.Matrix:
        """Return Σ cᵢ·Mᵢ for plane coordinates *coeffs*."""
        return sum((c * m for c, m in zip(coeffs, self.span)), sp.zeros(4, 4))

    def line_basis(self) -> t.Tuple[t.Tuple[int, int, int], t.Tuple[int, int, int]]:
        """Return the first pair of unit vectors completing q to a basis of Π."""
        units = [tuple(int(i == j) for j in range(3)) for i in range(3)]
        for first, second in ((0, 1), (0, 2), (1, 2)):
            if sp.Matrix([self.q_coeffs, units[first], units[second]]).det() != 0:
                return units[first], units[second]
        raise AssertionError("q is nonzero, so some pair of unit vectors completes it")


@dataclasses.dataclass(frozen=True)
class SliceInvariants:
    """Invariants of the family f_u over one chart, as polynomials in `U`."""

    chart: int
    coefficients: t.Tuple[sp.Poly, ...]
    I: sp.Poly  # pylint: disable = invalid-name
    J: sp.Poly  # pylint: disable = invalid-name
    Delta: sp.Poly  # pylint: disable = invalid-name


def _family_coefficients(sl: PlaneSlice) -> t.Tuple[sp.Poly, ...]:
    """Return the coefficients of s⁴⁻ᵏtᵏ in f_u for chart 0."""
    first, second = (sl.matrix_at(p) for p in sl.line_basis())
    matrix = S * sl.matrix_at(sl.q_coeffs) + T * (first + U * second)
    family = sp.Poly(matrix.det(method="berkowitz"), S, T, U, domain=sp.QQ)
    by_power: t.List[t.List[sp.Expr]] = [[] for _ in range(5)]
    for (_, t_power, u_power), coeff in family.terms():
        by_power[t_power].append(coeff * U**u_power)
    return tuple(sp.Poly(sp.Add(*terms), U, domain=sp.QQ) for terms in by_power)


def _reversal(poly: sp.Poly, weight: int) -> sp.Poly:
    """Return uʷ·p(1/u) for a polynomial of degree at most w."""
    if poly.is_zero:
        return poly
    coeffs = [0] * (weight - poly.degree()) + poly.all_coeffs()
    return sp.Poly(coeffs[::-1], U, domain=sp.QQ)


@functools.lru_cache(maxsize=256)
def slice_invariants(sl: PlaneSlice, chart: int = 0) -> SliceInvariants:
    """Return I(u), J(u) and Δ(u) of f_u = det(s·M(q) + t·M(r(u))).

    Raises:
        CertificationError: if a weighted degree bound fails; these
            hold for every slice, so a failure is a bug.
    """
    # pylint: disable = invalid-name
    if chart not in (0, 1):
        raise PreconditionError(f"chart must be 0 or 1, got {chart!r}")
    if chart == 0:
        coefficients = _family_coefficients(sl)
    else:
        # u·p₀ + p₁ = u·(p₀ + p₁/u), so the tᵏ coefficient becomes uᵏ·cₖ(1/u).
        near = slice_invariants(sl, 0)
        coefficients = tuple(_reversal(c, k) for k, c in enumerate(near.coefficients))
    I, J = weighted_invariants(*coefficients)
    Delta = I**3 - 27 * J**2
    for name, poly, bound in [("I", I, 4), ("J", J, 6), ("Delta", Delta, DISCRIMINANT_WEIGHT)] + [
        (f"c{k}", c, k) for k, c in enumerate(coefficients)
    ]:
        if not poly.is_zero and poly.degree() > bound:
            raise CertificationError(f"deg {name}(u) = {poly.degree()} exceeds its weight {bound}")
    return SliceInvariants(chart, coefficients, I, J, Delta)


def tangent_polynomial(sl: PlaneSlice) -> sp.Poly:
    """Return Δ(f_u) in chart 0; its roots are the tangent lines through q."""
    return slice_invariants(sl, 0).Delta


def tangent_pencil(sl: PlaneSlice, u: t.Any) -> Pencil:
    """Return the line of Π through q with direction p₀ + u·p₁."""
    first, second = sl.line_basis()
    value = coerce_rational(u)
    return Pencil(
        sl.matrix_at(sl.q_coeffs),
        sl.matrix_at([a + value * b for a, b in zip(first, second)]),
    )


def _order_at_zero(poly: sp.Poly) -> int:
    return min(monom[0] for monom in poly.monoms())


def _is_squarefree(poly: sp.Poly) -> bool:
    return poly.degree() <= 0 or poly.gcd(poly.diff(U)).degree() == 0


def _charts_agree(sl: PlaneSlice) -> bool:
    near, far = slice_invariants(sl, 0).Delta, slice_invariants(sl, 1).Delta
    if near.is_zero:
        return far.is_zero
    return far == _reversal(near, DISCRIMINANT_WEIGHT)


def count_tangents(sl: PlaneSlice) -> t.Tuple[int, bool]:
    """Count tangent lines through q with multiplicity.

    The roots of chart 0 are counted by degree and the root at u = ∞ by
    its order at 0 in chart 1.

    Returns:
        The count and whether every tangency is simple, i.e. both charts
        are squarefree and agree.

    Raises:
        InvalidSlice: if every line through q is tangent.
    """
    near, far = slice_invariants(sl, 0).Delta, slice_invariants(sl, 1).Delta
    if near.is_zero or far.is_zero:
        raise InvalidSlice("every line through q is tangent to the curve")
    count = near.degree() + _order_at_zero(far)
    all_simple = _is_squarefree(near) and _is_squarefree(far) and _charts_agree(sl)
    return count, all_simple


def _fiber_polynomial(invariants: SliceInvariants, a: sp.Rational) -> sp.Poly:
    return invariants.I**3 * (1728 - a) + invariants.J**2 * (27 * a)


def j_fiber_count(sl: PlaneSlice, a: t.Any) -> int:
    """Count lines through q with j = *a*, with multiplicity.

    This counts the roots of (1728 − a)·I³ + 27a·J², the numerator of
    j(f_u) − a, over both charts.

    Raises:
        PoleValue: if *a* is ∞.
        InvalidSlice: if j is constantly *a* along the lines through q.
    """
    if is_infinity(a) or a == "oo":
        raise PoleValue("the fiber over j = oo is the tangent locus, use count_tangents")
    value = coerce_rational(a)
    near = _fiber_polynomial(slice_invariants(sl, 0), value)
    far = _fiber_polynomial(slice_invariants(sl, 1), value)
    if near.is_zero or far.is_zero:
        raise InvalidSlice(f"j is identically {value} on the lines through q")
    return near.degree() + _order_at_zero(far)


def expected_tangent_count(degree: int = 4) -> int:
    """Return the number of tangents through a general point to a smooth plane curve.

    By Riemann–Hurwitz for the projection from the point, this is
    2g − 2 + 2d with g = (d − 1)(d − 2)/2, which equals d(d − 1).

    Examples:

        >>> expected_tangent_count()
        12
        >>> expected_tangent_count(3)
        6
    """
    genus = (degree - 1) * (degree - 2) // 2
    return 2 * genus - 2 + 2 * degree


def genericity_failures(sl: PlaneSlice) -> t.List[str]:
    """Return why *sl* is not a general slice; empty if it is.

    General means: Δ(u) has full degree 12 and is squarefree, both
    charts agree, and gcd(I(u), Δ(u)) = 1, i.e. no line through q has
    a triple root.
    """
    near = slice_invariants(sl, 0)
    if near.Delta.is_zero:
        return ["every line through q is tangent to the curve"]
    failures = []
    if near.Delta.degree() != DISCRIMINANT_WEIGHT:
        failures.append(f"tangent polynomial has degree {near.Delta.degree()} < {DISCRIMINANT_WEIGHT}")
    if not _is_squarefree(near.Delta):
        failures.append("tangent polynomial is not squarefree")
    if not _charts_agree(sl):
        failures.append("tangent polynomials of the two charts disagree")
    if near.I.gcd(near.Delta).degree() > 0:
        failures.append("I(u) and Delta(u) have a common factor")
    return failures


@dataclasses.dataclass(frozen=True)
class SliceReport:
    """Tangent and j-fiber counts of one slice.

    Attributes:
        seed: Seed of the slice, if it was sampled.
        retries: Rejected samples before this slice.
        tangent_poly_degree: Degree of Δ(u) in chart 0.
        tangent_squarefree: Whether Δ(u) is squarefree in chart 0.
        tangent_count_with_multiplicity: Tangents through q, both charts.
        all_simple: Whether every tangency is simple.
        j_fiber_counts: Lines through q with j = a, with multiplicity.
        genericity_failures: Empty for a general slice.
    """

    seed: t.Optional[int]
    retries: int
    tangent_poly_degree: int
    tangent_squarefree: bool
    tangent_count_with_multiplicity: int
    all_simple: bool
    j_fiber_counts: t.Mapping[sp.Rational, int]
    genericity_failures: t.Tuple[str, ...]


def slice_report(sl: PlaneSlice, test_values: t.Iterable[t.Any], *, retries: int = 0) -> SliceReport:
    """Run every count on *sl*."""
    delta = tangent_polynomial(sl)
    count, all_simple = count_tangents(sl)
    return SliceReport(
        seed=sl.seed,
        retries=retries,
        tangent_poly_degree=int(delta.degree()),
        tangent_squarefree=_is_squarefree(delta),
        tangent_count_with_multiplicity=count,
        all_simple=all_simple,
        j_fiber_counts={coerce_rational(a): j_fiber_count(sl, a) for a in test_values},
        genericity_failures=tuple(genericity_failures(sl)),
    )


def _draw_symmetric(rng: np.random.Generator, height: int) -> sp.ImmutableMatrix:
    upper = iter(rng.integers(-height, height, size=10, endpoint=True))
    matrix = sp.zeros(4, 4)
    for i in range(4):
        for j in range(i, 4):
            matrix[i, j] = matrix[j, i] = int(next(upper))
    return sp.ImmutableMatrix(matrix)


def generic_slice(seed: int, height: int = DEFAULT_HEIGHT) -> t.Tuple[PlaneSlice, int]:
    """Sample slices from *seed* until one is general.

    Returns:
        The slice and the number of rejected samples.

    Raises:
        GenericityExhausted: after `RETRY_BOUND` rejected samples.
    """
    if height < 2:
        raise PreconditionError(f"height must be at least 2, got {height!r}")
    rng = np.random.default_rng(seed)
    for attempt in range(RETRY_BOUND):
        span = tuple(_draw_symmetric(rng, height) for _ in range(3))
        q_coeffs = tuple(int(c) for c in rng.integers(-height, height, size=3, endpoint=True))
        try:
            sl = PlaneSlice(span, q_coeffs, seed=seed)  # type: ignore[arg-type]
        except InvalidSlice as exc:
            LOG.debug("seed %d, attempt %d: %s", seed, attempt, exc)
            continue
        failures = genericity_failures(sl)
        if not failures:
            return sl, attempt
        LOG.debug("seed %d, attempt %d: %s", seed, attempt, "; ".join(failures))
    raise GenericityExhausted(f"seed {seed!r}: no general slice in {RETRY_BOUND} samples")


def random_slice(seed: int, height: int = DEFAULT_HEIGHT) -> PlaneSlice:
    """Return the first general slice sampled from *seed*.

    Entries are integers in [−height, height]. The same seed always
    gives the same slice.
    """
    sl, _ = generic_slice(seed, height)
    return sl
