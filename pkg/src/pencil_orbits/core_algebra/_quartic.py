# SPDX-FileCopyrightText: 2020-2023 CERN
# SPDX-FileCopyrightText: 2023 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Binary quartic forms and their classical invariants."""

from __future__ import annotations

import dataclasses
import typing as t

import sympy as sp

from ..errors import PreconditionError
from ..utils.coerce_rational import coerce_rational, coerce_rational_tuple
from ..utils.typecheck import ProjectiveValue, is_infinity

__all__ = [
    "BinaryQuartic",
    "InvariantTriple",
    "RootFactor",
    "RootType",
    "S",
    "SingularSubstitution",
    "T",
    "UndefinedJ",
    "X",
    "ZeroForm",
    "binary_quartic_from_roots",
    "gl2_substitute",
    "invariants",
    "j_invariant",
    "root_factors",
    "root_type",
    "weighted_invariants",
]

S, T = sp.symbols("s t")
X = sp.Symbol("x")

BINOMIALS = (1, 4, 6, 4, 1)

Ring = t.TypeVar("Ring")


class ZeroForm(PreconditionError):
    """The binary quartic is identically zero."""


class UndefinedJ(PreconditionError):
    """Both I and J vanish, so the j-invariant has no value."""


class SingularSubstitution(PreconditionError):
    """A substitution matrix is not invertible."""


@dataclasses.dataclass(frozen=True)
class BinaryQuartic:
    """The form c₀s⁴ + c₁s³t + c₂s²t² + c₃st³ + c₄t⁴.

    Coefficients are stored plain. The binomially weighted coefficients
    aᵢ = cᵢ / C(4, i) that appear in the invariant formulas are derived
    on demand by `weighted`.

    Attributes:
        c: The five coefficients, coerced to `sympy.Rational`.

    Examples:

        >>> f = BinaryQuartic((1, 0, 0, -1, 0))
        >>> f.weighted
        (1, 0, 0, -1/4, 0)
        >>> f.as_expr()
        s**4 - s*t**3
    """

    c: t.Tuple[sp.Rational, ...]

    def __post_init__(self) -> None:
        coeffs = coerce_rational_tuple(self.c)
        if len(coeffs) != 5:
            raise PreconditionError(
                f"a binary quartic needs 5 coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "c", coeffs)

    @classmethod
    def from_expr(
        cls, expr: sp.Expr, svar: sp.Symbol = S, tvar: sp.Symbol = T
    ) -> BinaryQuartic:
        """Read the coefficients off a homogeneous quartic in *svar*, *tvar*."""
        poly = sp.Poly(sp.expand(expr), svar, tvar, domain=sp.QQ)
        if not poly.is_zero and (not poly.is_homogeneous or poly.total_degree() != 4):
            raise PreconditionError(f"not a binary quartic: {expr}")
        return cls(tuple(poly.coeff_monomial(svar ** (4 - i) * tvar**i) for i in range(5)))

    @property
    def is_zero(self) -> bool:
        return not any(self.c)

    @property
    def weighted(self) -> t.Tuple[sp.Rational, ...]:
        return tuple(c / binom for c, binom in zip(self.c, BINOMIALS))

    def as_expr(self, svar: sp.Symbol = S, tvar: sp.Symbol = T) -> sp.Expr:
        return sp.Add(*(c * svar ** (4 - i) * tvar**i for i, c in enumerate(self.c)))

    def dehomogenize(self, x: sp.Symbol = X) -> sp.Poly:
        """Return f(x, 1) as a univariate polynomial.

        A degree drop of k means the point (1:0) is a root of f of
        multiplicity k.
        """
        return sp.Poly(self.as_expr(x, sp.Integer(1)), x, domain=sp.QQ)

    def scaled(self, factor: sp.Rational) -> BinaryQuartic:
        return BinaryQuartic(tuple(factor * c for c in self.c))

    def __str__(self) -> str:
        return str(self.as_expr())


@dataclasses.dataclass(frozen=True)
class InvariantTriple:
    """The invariants I, J and Δ = I³ − 27J² of a binary quartic."""

    I: sp.Rational  # pylint: disable = invalid-name
    J: sp.Rational  # pylint: disable = invalid-name
    Delta: sp.Rational  # pylint: disable = invalid-name


def weighted_invariants(
    c0: Ring, c1: Ring, c2: Ring, c3: Ring, c4: Ring
) -> t.Tuple[Ring, Ring]:
    """Return (I, J) for plain coefficients over any commutative ring.

    This is shared between rational quartics and quartics whose
    coefficients are themselves polynomials, e.g. in a line parameter.
    """
    # pylint: disable = invalid-name
    a0, a1, a2, a3, a4 = (
        t.cast(t.Any, c) * sp.Rational(1, binom)
        for c, binom in zip((c0, c1, c2, c3, c4), BINOMIALS)
    )
    I = a0 * a4 - 4 * a1 * a3 + 3 * a2**2
    J = a0 * a2 * a4 + 2 * a1 * a2 * a3 - a2**3 - a0 * a3**2 - a1**2 * a4
    return I, J


def invariants(f: BinaryQuartic) -> InvariantTriple:
    """Return the invariants of *f*.

    Examples:

        >>> invariants(BinaryQuartic((1, 0, 0, 0, 1)))
        InvariantTriple(I=1, J=0, Delta=1)
        >>> invariants(BinaryQuartic((1, 0, 0, -1, 0)))
        InvariantTriple(I=0, J=-1/16, Delta=-27/256)
    """
    # pylint: disable = invalid-name
    I, J = weighted_invariants(*f.c)
    return InvariantTriple(I, J, I**3 - 27 * J**2)


def j_invariant(f: BinaryQuartic) -> ProjectiveValue:
    """Return 1728·I³/Δ, or ∞ where Δ vanishes.

    Raises:
        ZeroForm: if *f* is identically zero.
        UndefinedJ: if I = J = 0, i.e. *f* has a root of multiplicity
            at least three.

    Examples:

        >>> j_invariant(BinaryQuartic((1, 0, 0, 0, 1)))
        1728
        >>> j_invariant(BinaryQuartic((0, 1, 0, 0, 0)))
        Traceback (most recent call last):
        ...
        UndefinedJ: I = J = 0 for s**3*t
    """
    if f.is_zero:
        raise ZeroForm("the zero form has no j-invariant")
    triple = invariants(f)
    if triple.I == 0 and triple.J == 0:
        raise UndefinedJ(f"I = J = 0 for {f}")
    if triple.Delta == 0:
        return sp.oo
    return 1728 * triple.I**3 / triple.Delta


def gl2_substitute(f: BinaryQuartic, matrix: t.Any) -> BinaryQuartic:
    """Return f((s, t)·M).

    Raises:
        SingularSubstitution: if det(M) = 0.
    """
    mat = sp.Matrix(matrix).applyfunc(coerce_rational)
    if mat.shape != (2, 2):
        raise PreconditionError(f"expected a 2×2 matrix, got shape {mat.shape}")
    if mat.det() == 0:
        raise SingularSubstitution(f"singular substitution {mat.tolist()}")
    new_s = S * mat[0, 0] + T * mat[1, 0]
    new_t = S * mat[0, 1] + T * mat[1, 1]
    return BinaryQuartic.from_expr(
        f.as_expr().subs({S: new_s, T: new_t}, simultaneous=True)
    )


@dataclasses.dataclass(frozen=True)
class RootType:
    """Multiset of root multiplicities of a binary quartic on P¹.

    Attributes:
        partition: The multiplicities in descending order. Empty for
            the zero form.
        is_zero: True if the form vanishes identically.
    """

    partition: t.Tuple[int, ...]
    is_zero: bool = False

    @property
    def is_squarefree(self) -> bool:
        return self.partition == (1, 1, 1, 1)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return "+".join(map(str, self.partition))


@dataclasses.dataclass(frozen=True)
class RootFactor:
    """An irreducible factor of a binary quartic over ℚ.

    Attributes:
        minimal_polynomial: The factor of f(x, 1) as a monic polynomial
            in *x*, where the point (x:1) of P¹ is a root. None stands
            for the point (1:0).
        multiplicity: Multiplicity of each root of this factor in f.
    """

    minimal_polynomial: t.Optional[sp.Poly]
    multiplicity: int

    @property
    def degree(self) -> int:
        if self.minimal_polynomial is None:
            return 1
        return self.minimal_polynomial.degree()

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    @property
    def point(self) -> ProjectiveValue:
        """The x-coordinate of a rational root; ∞ stands for (1:0)."""
        if self.minimal_polynomial is None:
            return sp.oo
        if not self.is_rational:
            raise PreconditionError(f"root of {self.minimal_polynomial} is irrational")
        lead, const = self.minimal_polynomial.all_coeffs()
        return -const / lead

    @property
    def homogeneous_point(self) -> t.Tuple[sp.Rational, sp.Rational]:
        """(s₀, t₀) with f(s₀, t₀) = 0 for a rational root."""
        point = self.point
        if is_infinity(point):
            return sp.Integer(1), sp.Integer(0)
        return point, sp.Integer(1)


def root_factors(f: BinaryQuartic) -> t.List[RootFactor]:
    """Decompose *f* into its distinct irreducible factors over ℚ.

    The point (1:0) comes first if it is a root. The remaining factors
    are ordered by degree, then by their coefficients.
    """
    if f.is_zero:
        raise ZeroForm("the zero form has no roots")
    poly = f.dehomogenize()
    result = []
    at_infinity = 4 - poly.degree()
    if at_infinity:
        result.append(RootFactor(None, at_infinity))
    _, factors = poly.factor_list()
    finite = [RootFactor(factor.monic(), mult) for factor, mult in factors]
    finite.sort(
        key=lambda factor: (
            factor.degree,
            tuple(t.cast(sp.Poly, factor.minimal_polynomial).all_coeffs()),
        )
    )
    result.extend(finite)
    return result


def root_type(f: BinaryQuartic) -> RootType:
    """Return the root multiplicities of *f* on P¹.

    Multiplicities are decided by exact squarefree decomposition, never
    by numeric roots.

    Examples:

        >>> print(root_type(BinaryQuartic.from_expr(-T**2 * (S + T) * (S + 2 * T) / 4)))
        2+1+1
        >>> print(root_type(BinaryQuartic.from_expr(S**2 * T**2)))
        2+2
        >>> root_type(BinaryQuartic((0, 0, 0, 0, 0))).is_zero
        True
    """
    if f.is_zero:
        return RootType((), is_zero=True)
    poly = f.dehomogenize()
    multiplicities = [4 - poly.degree()] if poly.degree() < 4 else []
    _, factors = poly.sqf_list()
    for factor, mult in factors:
        multiplicities.extend([mult] * factor.degree())
    return RootType(tuple(sorted(multiplicities, reverse=True)))


def binary_quartic_from_roots(roots: t.Sequence[t.Any]) -> BinaryQuartic:
    """Return ∏(s − rᵢt); a root ∞ contributes the factor t.

    Examples:

        >>> print(binary_quartic_from_roots([0, 1, 2, sp.oo]))
        s**3*t - 3*s**2*t**2 + 2*s*t**3
    """
    if len(roots) != 4:
        raise PreconditionError(f"expected 4 roots, got {len(roots)}")
    factors = [T if is_infinity(r) else S - coerce_rational(r) * T for r in roots]
    return BinaryQuartic.from_expr(sp.Mul(*factors))
