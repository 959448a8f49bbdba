# SPDX-FileCopyrightText: 2020-2023 CERN
# SPDX-FileCopyrightText: 2023 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Certified isolation of complex roots of rational polynomials.

Multiplicities are always decided exactly by squarefree decomposition,
and rational roots are split off exactly by factoring over ℚ. Numerics
only locate the roots of the remaining irreducible factors; every
approximation comes with an inclusion radius from the Weierstrass
bound, and the disks of all distinct roots must be pairwise disjoint.
If they are not, the working precision is doubled.
"""

from __future__ import annotations

import dataclasses
import itertools
import typing as t
from logging import getLogger

import mpmath
import sympy as sp

from ..errors import CertificationError, PreconditionError
from ..utils.coerce_rational import coerce_rational_tuple
from ..utils.typecheck import ProjectiveValue
from ._quartic import BinaryQuartic, root_factors

__all__ = [
    "CRoot",
    "DEFAULT_PRECISION_BITS",
    "MAX_PRECISION_BITS",
    "U",
    "ZeroPolynomial",
    "as_unipoly",
    "complex_roots",
    "mp_rational",
    "quartic_roots",
]

LOG = getLogger(__name__)

DEFAULT_PRECISION_BITS = 256
MAX_PRECISION_BITS = 4096
MIN_PRECISION_BITS = 64

U = sp.Symbol("u")


class ZeroPolynomial(PreconditionError):
    """The polynomial is identically zero."""


class _Uncertified(Exception):
    """Internal signal to retry at a higher precision."""


@dataclasses.dataclass(frozen=True)
class CRoot:
    """A certified complex root.

    Attributes:
        approximation: Center of the inclusion disk.
        error_radius: The disk of this radius around *approximation*
            contains exactly one root, and the disks of distinct roots
            of the same polynomial are disjoint. Zero for roots that are
            known exactly.
        multiplicity: Exact multiplicity of the root.
        precision_bits: Working precision at which the root certified.
        exact: The root itself if it is rational, otherwise None.
    """

    approximation: mpmath.mpc
    error_radius: mpmath.mpf
    multiplicity: int
    precision_bits: int
    exact: t.Optional[sp.Rational] = None

    def sort_key(self) -> t.Tuple[mpmath.mpf, mpmath.mpf]:
        return (self.approximation.real, self.approximation.imag)


def mp_rational(value: sp.Rational) -> mpmath.mpf:
    """Convert an exact rational at the current mpmath precision."""
    return mpmath.mpf(int(value.p)) / int(value.q)


def as_unipoly(poly: t.Any, gen: sp.Symbol = U) -> sp.Poly:
    """Accept a univariate Poly or a sequence of coefficients in ascending degree."""
    if isinstance(poly, sp.Poly):
        if len(poly.gens) != 1:
            raise PreconditionError(f"not univariate: {poly}")
        return poly.set_domain(sp.QQ)
    coeffs = coerce_rational_tuple(poly)
    return sp.Poly(list(reversed(coeffs)) or [0], gen, domain=sp.QQ)


def complex_roots(
    poly: t.Any, precision_bits: int = DEFAULT_PRECISION_BITS
) -> t.List[CRoot]:
    """Return one certified root per distinct root of *poly*.

    Args:
        poly: A univariate `sympy.Poly` over ℚ or a sequence of
            coefficients in ascending degree.
        precision_bits: Initial working precision. It is doubled until
            all roots certify, up to `MAX_PRECISION_BITS`.

    Returns:
        The roots sorted by real, then imaginary part. Their
        multiplicities add up to the degree of *poly*.

    Raises:
        ZeroPolynomial: if *poly* vanishes identically.
        CertificationError: if the roots do not separate at
            `MAX_PRECISION_BITS`.
    """
    unipoly = as_unipoly(poly)
    if unipoly.is_zero:
        raise ZeroPolynomial("cannot isolate the roots of the zero polynomial")
    if precision_bits < MIN_PRECISION_BITS:
        raise PreconditionError(
            f"precision must be at least {MIN_PRECISION_BITS} bits, got {precision_bits}"
        )
    _, squarefree = unipoly.sqf_list()
    factors = [
        (irreducible, multiplicity)
        for part, multiplicity in squarefree
        for irreducible, _ in part.factor_list()[1]
    ]
    bits = precision_bits
    while True:
        try:
            return _isolate(factors, bits)
        except _Uncertified as exc:
            if bits >= MAX_PRECISION_BITS:
                raise CertificationError(
                    f"roots of {unipoly.as_expr()} do not separate at {bits} bits"
                ) from exc
            LOG.debug("retrying root isolation at %d bits: %s", 2 * bits, exc)
            bits *= 2


def _isolate(factors: t.List[t.Tuple[sp.Poly, int]], bits: int) -> t.List[CRoot]:
    roots: t.List[CRoot] = []
    with mpmath.mp.workprec(bits):
        for factor, multiplicity in factors:
            if factor.degree() == 1:
                lead, const = factor.all_coeffs()
                exact = -const / lead
                roots.append(
                    CRoot(mpmath.mpc(mp_rational(exact)), mpmath.mpf(0), multiplicity, bits, exact)
                )
            else:
                roots.extend(_isolate_squarefree(factor, multiplicity, bits))
        _check_separation(roots)
    roots.sort(key=CRoot.sort_key)
    return roots


def _isolate_squarefree(factor: sp.Poly, multiplicity: int, bits: int) -> t.List[CRoot]:
    coeffs = [mp_rational(c) for c in factor.all_coeffs()]
    degree = len(coeffs) - 1
    try:
        approximations = mpmath.polyroots(
            coeffs, maxsteps=50 + 20 * degree * (bits // 64), extraprec=bits, cleanup=True
        )
    except mpmath.mp.NoConvergence as exc:
        raise _Uncertified(f"no convergence for {factor.as_expr()}") from exc
    approximations = [mpmath.mpc(z) for z in approximations]
    lead = abs(coeffs[0])
    rounding = mpmath.ldexp(1, 8 - bits)
    result = []
    for i, z in enumerate(approximations):
        others = [abs(z - w) for j, w in enumerate(approximations) if j != i]
        denominator = lead * mpmath.fprod(others)
        if denominator == 0:
            raise _Uncertified(f"coincident approximations for {factor.as_expr()}")
        # Account for the rounding error of evaluating f(z) itself.
        magnitude = mpmath.polyval([abs(c) for c in coeffs], abs(z))
        numerator = degree * (abs(mpmath.polyval(coeffs, z)) + rounding * magnitude)
        result.append(CRoot(z, numerator / denominator, multiplicity, bits))
    return result


def _check_separation(roots: t.Sequence[CRoot]) -> None:
    for first, second in itertools.combinations(roots, 2):
        half_distance = abs(first.approximation - second.approximation) / 2
        if first.error_radius >= half_distance or second.error_radius >= half_distance:
            raise _Uncertified(
                f"disks around {mpmath.nstr(first.approximation, 8)} and "
                f"{mpmath.nstr(second.approximation, 8)} overlap"
            )


RootPoint = t.Union[ProjectiveValue, CRoot]


def quartic_roots(
    f: BinaryQuartic, precision_bits: int = DEFAULT_PRECISION_BITS
) -> t.List[t.Tuple[RootPoint, int]]:
    """Return the roots of *f* as points x of P¹ with f(x, 1) = 0.

    Rational roots are returned exactly, the point (1:0) as ∞, and
    irrational roots as certified `CRoot` values.
    """
    result: t.List[t.Tuple[RootPoint, int]] = []
    for factor in root_factors(f):
        if factor.is_rational:
            result.append((factor.point, factor.multiplicity))
        else:
            for root in complex_roots(t.cast(sp.Poly, factor.minimal_polynomial), precision_bits):
                result.append((root, factor.multiplicity))
    return result
