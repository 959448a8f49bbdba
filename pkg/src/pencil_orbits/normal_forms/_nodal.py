# SPDX-FileCopyrightText: 2020-2023 CERN
# SPDX-FileCopyrightText: 2023 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Normal forms of pencils tangent to the determinant hypersurface.

Every pencil whose discriminant has root type 2+1+1 with a rank-3
double-root member is congruent, after a change of basis, to

    W(a, b) = ⟨x0² + x1² + x2², x0·x3 + a·x1² + b·x2²⟩,   ab ≠ 0, a ≠ b,

and reparameterizing the line moves every W(a, b) to W(1, 2).

The pipeline stays over ℚ for as long as it can. Transformations are
tracked as substitution matrices S acting by Q ↦ SᵀQS; the reported
group element is g = Sᵀ so that `congruence_act` (Q ↦ gQgᵀ) reproduces
the normal form.
"""

from __future__ import annotations

import dataclasses
import typing as t
from logging import getLogger

import mpmath
import sympy as sp

from ..core_algebra import (
    DEFAULT_PRECISION_BITS,
    MAX_PRECISION_BITS,
    CRoot,
    X,
    complex_roots,
    mp_rational,
)
from ..errors import CertificationError, PreconditionError
from ..pencil import (
    OrbitTag,
    Pencil,
    SingularMember,
    basis_change,
    classify,
    congruence_act,
)
from ..utils.coerce_rational import coerce_rational
from ._linear import Path, congruence_diagonalize, max_abs, nodal_basis, to_mp_matrix

__all__ = [
    "CanonicalForm",
    "NodalFormResult",
    "NotNodal",
    "W_NODE",
    "nodal_canonicalize",
    "nodal_normalize",
    "tangent_member",
    "w_pencil",
]

LOG = getLogger(__name__)

Coefficient = t.Union[sp.Rational, CRoot]


class NotNodal(PreconditionError):
    """The pencil is not in the nodal stratum."""


def w_pencil(a: t.Any, b: t.Any) -> Pencil:
    """Return W(a, b) = ⟨x0² + x1² + x2², x0·x3 + a·x1² + b·x2²⟩.

    Raises:
        PreconditionError: unless a, b are nonzero and distinct.
    """
    a, b = coerce_rational(a), coerce_rational(b)
    if a == 0 or b == 0 or a == b:
        raise PreconditionError(f"need nonzero distinct a, b; got {a}, {b}")
    half = sp.Rational(1, 2)
    return Pencil(
        sp.diag(1, 1, 1, 0),
        sp.Matrix([[0, 0, 0, half], [0, a, 0, 0], [0, 0, b, 0], [half, 0, 0, 0]]),
    )


W_NODE = w_pencil(1, 2)


@dataclasses.dataclass(frozen=True)
class NodalFormResult:
    """The outcome of `nodal_normalize`.

    ``congruence_act(g, basis_change(P, m))`` equals ``w_pencil(a, b)``:
    exactly on the exact path, up to *residual* otherwise.

    Attributes:
        a: Coefficient of x1², rational whenever possible.
        b: Coefficient of x2².
        g: The group element; SymPy on the exact path, mpmath otherwise.
        m: The rational basis change of the pencil.
        path: Whether the result is exact.
        residual: Largest entry of the defect; zero if exact.
        precision_bits: Working precision of the numeric path.
    """

    a: Coefficient
    b: Coefficient
    g: t.Any
    m: sp.ImmutableMatrix
    path: Path
    residual: mpmath.mpf
    precision_bits: t.Optional[int] = None


@dataclasses.dataclass(frozen=True)
class CanonicalForm:
    """The outcome of `nodal_canonicalize`.

    ``congruence_act(g, basis_change(P, m))`` equals `W_NODE`.

    Attributes:
        g: The group element.
        m: The basis change; rational on the exact path.
        path: Whether the result is exact.
        residual: Largest entry of the defect; zero if exact.
        normal_form: The intermediate `NodalFormResult`.
    """

    g: t.Any
    m: t.Any
    path: Path
    residual: mpmath.mpf
    normal_form: NodalFormResult


def tangent_member(pencil: Pencil, precision_bits: int = DEFAULT_PRECISION_BITS) -> SingularMember:
    """Return the rank-3 member at the double root of a nodal pencil.

    Raises:
        NotNodal: if the pencil is not in the nodal stratum.
    """
    verdict = classify(pencil, precision_bits)
    if verdict.tag is not OrbitTag.NODAL_STRATUM:
        raise NotNodal(f"pencil is {verdict.tag.value} with root type {verdict.root_type}")
    return next(member for member in verdict.diagnostics if member.multiplicity == 2)


def _block(top_left: sp.MatrixBase, offset: int = 0) -> sp.Matrix:
    """Embed a square matrix into the 4×4 identity at (*offset*, *offset*)."""
    result = sp.eye(4)
    size = top_left.rows
    result[offset : offset + size, offset : offset + size] = top_left
    return result


@dataclasses.dataclass
class _RationalReduction:
    """State after the steps of the pipeline that stay over ℚ.

    With S the substitution so far, SᵀQ0'S = diag(e0, e1, e2, 0) and
    SᵀQ1'S = kappa·z0z3 + residual(z1, z2).
    """

    substitution: sp.Matrix
    e: t.Tuple[sp.Rational, sp.Rational, sp.Rational]
    kappa: sp.Rational
    residual: sp.Matrix


def _reduce_over_rationals(tangent: sp.MatrixBase, other: sp.MatrixBase) -> _RationalReduction:
    # Move the tangent member to d0·y0² + d1·y1² + d2·y2² with kernel e3.
    basis, diagonal = congruence_diagonalize(tangent)
    if diagonal[3] != 0 or any(d == 0 for d in diagonal[:3]):
        raise NotNodal(f"tangent member has diagonal form {diagonal}, expected rank 3")
    image = basis.T * other * basis
    # Tangency at a smooth point of D: no y3² term.
    if image[3, 3] != 0:
        raise CertificationError("kernel vector of the tangent member is off the base locus")
    linear = sp.Matrix([2 * image[i, 3] for i in range(3)])
    weights = sp.diag(*diagonal[:3])
    # Make the linear form L = l·y proportional to z0, keeping the first
    # form diagonal: f0 = D⁻¹l and a D-orthogonal basis of ker(lᵀ).
    first = weights.inv() * linear
    kernel = sp.Matrix.hstack(*linear.T.nullspace())
    kernel_basis, _ = congruence_diagonalize(kernel.T * weights * kernel)
    frame = sp.Matrix.hstack(first, kernel * kernel_basis)
    substitution = basis * _block(frame)
    image = substitution.T * other * substitution
    kappa = 2 * image[0, 3]
    if kappa == 0:
        raise NotNodal("the linear form vanishes on the vertex direction")
    # Shear z3 ↦ z3 + ℓ·z to absorb the z0·z_i terms of the second form.
    shear = sp.eye(4)
    shear[3, 0] = -image[0, 0] / kappa
    shear[3, 1] = -2 * image[0, 1] / kappa
    shear[3, 2] = -2 * image[0, 2] / kappa
    substitution = substitution * shear
    image = substitution.T * other * substitution
    diagonal_first = substitution.T * tangent * substitution
    return _RationalReduction(
        substitution,
        (diagonal_first[0, 0], diagonal_first[1, 1], diagonal_first[2, 2]),
        kappa,
        image[1:3, 1:3],
    )


def _rational_sqrt(value: t.Any) -> t.Optional[sp.Rational]:
    root = sp.sqrt(value)
    return root if root.is_Rational else None


def _exact_normal_form(
    reduction: _RationalReduction,
) -> t.Optional[t.Tuple[sp.Rational, sp.Rational, sp.Matrix]]:
    residual_form = reduction.residual
    weights = sp.diag(*reduction.e[1:])
    mu = sp.Symbol("mu")
    quadratic = sp.Poly((residual_form - mu * weights).det(), mu, domain=sp.QQ)
    _, factors = quadratic.factor_list()
    if not all(factor.degree() == 1 for factor, _ in factors):
        return None
    values = sorted(-factor.all_coeffs()[1] / factor.all_coeffs()[0] for factor, _ in factors)
    vectors = [(residual_form - value * weights).nullspace()[0] for value in values]
    heights = [(v.T * weights * v)[0, 0] for v in vectors]
    roots = [_rational_sqrt(value) for value in (reduction.e[0], *heights)]
    if any(root is None for root in roots):
        LOG.debug("square roots of %s, %s are not rational", reduction.e[0], heights)
        return None
    head, first, second = t.cast(t.List[sp.Rational], roots)
    rotation = _block(sp.Matrix.hstack(*vectors), offset=1)
    scaling = sp.diag(1 / head, 1 / first, 1 / second, head / reduction.kappa)
    return values[0], values[1], reduction.substitution * rotation * scaling


def _target(a: t.Any, b: t.Any) -> t.Tuple[mpmath.matrix, mpmath.matrix]:
    half = mpmath.mpf(1) / 2
    return (
        mpmath.diag([1, 1, 1, 0]),
        mpmath.matrix([[0, 0, 0, half], [0, a, 0, 0], [0, 0, b, 0], [half, 0, 0, 0]]),
    )


def _numeric_normal_form(
    reduction: _RationalReduction,
    working: Pencil,
    precision_bits: int,
) -> t.Tuple[Coefficient, Coefficient, mpmath.matrix, mpmath.mpf, int]:
    residual_form = reduction.residual
    weights = sp.diag(*reduction.e[1:])
    mu = sp.Symbol("mu")
    quadratic = sp.Poly((residual_form - mu * weights).det(), mu, domain=sp.QQ)
    bits = precision_bits
    while True:
        roots = complex_roots(quadratic, bits)
        bits = max(bits, max(root.precision_bits for root in roots))
        with mpmath.mp.workprec(bits):
            values = [root.approximation for root in roots]
            form = to_mp_matrix(residual_form)
            e1, e2 = (mp_rational(e) for e in reduction.e[1:])
            columns = []
            for value in values:
                # Two kernel candidates of the singular 2×2 matrix, one per row.
                candidates = [
                    mpmath.matrix([form[0, 1], -(form[0, 0] - value * e1)]),
                    mpmath.matrix([form[1, 1] - value * e2, -form[1, 0]]),
                ]
                vector = max(candidates, key=mpmath.norm)
                height = vector[0] ** 2 * e1 + vector[1] ** 2 * e2
                columns.append(vector / mpmath.sqrt(height))
            head = mpmath.sqrt(mp_rational(reduction.e[0]))
            transform = to_mp_matrix(reduction.substitution) * mpmath.matrix(
                [
                    [1 / head, 0, 0, 0],
                    [0, columns[0][0], columns[1][0], 0],
                    [0, columns[0][1], columns[1][1], 0],
                    [0, 0, 0, head / mp_rational(reduction.kappa)],
                ]
            )
            first_target, second_target = _target(*values)
            residual = max(
                max_abs(transform.T * to_mp_matrix(working.Q0) * transform - first_target),
                max_abs(transform.T * to_mp_matrix(working.Q1) * transform - second_target),
            )
            if residual < mpmath.ldexp(1, -(bits // 2)):
                a, b = (root.exact if root.exact is not None else root for root in roots)
                return a, b, transform, residual, bits
        if bits >= MAX_PRECISION_BITS:
            raise CertificationError(f"nodal normal form residual {residual} does not certify")
        LOG.debug("nodal normal form residual too large at %d bits", bits)
        bits *= 2


def nodal_normalize(
    pencil: Pencil, precision_bits: int = DEFAULT_PRECISION_BITS
) -> NodalFormResult:
    """Bring a nodal pencil to the form W(a, b).

    Steps:

    1. change the basis so that Q0' is the tangent member and Q1' is
       nonsingular (so that ab ≠ 0);
    2. diagonalize Q0' over ℚ with its kernel vector last; the vertex
       lies on the base locus, so the x3² coefficient of Q1' vanishes;
    3. rotate (D-orthogonally) so that the x3-coefficient of Q1' is
       a multiple of x0;
    4. shear x3 to cancel the x0², x0x1, x0x2 terms of Q1';
    5. diagonalize what remains of Q1' against Q0' in x1, x2;
    6. rescale. This is the only step that needs square roots.

    The coefficients (a, b) are the generalized eigenvalues of step 5,
    sorted ascending when rational.

    Raises:
        NotNodal: if the pencil is not in the nodal stratum.

    Examples:

        >>> result = nodal_normalize(W_NODE)
        >>> result.a, result.b, result.path
        (1, 2, <Path.EXACT: 'Exact'>)
        >>> result.g == sp.eye(4) and result.m == sp.eye(2)
        True
    """
    tangent = tangent_member(pencil, precision_bits)
    m = nodal_basis(pencil, tangent)
    working = basis_change(pencil, m)
    reduction = _reduce_over_rationals(working.Q0, working.Q1)
    exact = _exact_normal_form(reduction)
    if exact is not None:
        a, b, substitution = exact
        g = sp.ImmutableMatrix(substitution.T)
        if congruence_act(g, working) != w_pencil(a, b):
            raise CertificationError(f"exact normal form of {pencil} does not verify")
        return NodalFormResult(a, b, g, m, Path.EXACT, mpmath.mpf(0))
    LOG.info("normal form of %s needs irrational square roots", pencil)
    a, b, transform, residual, bits = _numeric_normal_form(reduction, working, precision_bits)
    return NodalFormResult(a, b, transform.T, m, Path.CERTIFIED_NUMERIC, residual, bits)


def nodal_canonicalize(
    pencil: Pencil, precision_bits: int = DEFAULT_PRECISION_BITS
) -> CanonicalForm:
    """Map a nodal pencil to `W_NODE`.

    Starting from W(a, b), the new basis Q0'' = Q0', Q1'' = γQ0' + δQ1'
    with δ = 1/(b − a), γ = 1 − δa sends the simple roots of the
    discriminant to −1 and −1/2. The shear x3 ↦ (x3 − γ·x0)/δ then
    restores the x0·x3 term.

    Raises:
        NotNodal: if the pencil is not in the nodal stratum.
        CertificationError: if the numeric residual stays above
            2^(-bits/2) up to `MAX_PRECISION_BITS`.

    Examples:

        >>> form = nodal_canonicalize(w_pencil(2, 1))
        >>> form.g == sp.Matrix([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
        True
        >>> form.m == sp.eye(2)
        True
    """
    normal = nodal_normalize(pencil, precision_bits)
    if normal.path is Path.EXACT:
        a, b = t.cast(t.Tuple[sp.Rational, sp.Rational], (normal.a, normal.b))
        delta = 1 / (b - a)
        gamma = 1 - delta * a
        shear = sp.eye(4)
        shear[3, 3] = 1 / delta
        shear[3, 0] = -gamma / delta
        g = sp.ImmutableMatrix(shear.T * normal.g)
        m = sp.ImmutableMatrix(sp.Matrix([[1, 0], [gamma, delta]]) * normal.m)
        if congruence_act(g, basis_change(pencil, m)) != W_NODE:
            raise CertificationError(f"canonical form of {pencil} does not verify")
        return CanonicalForm(g, m, Path.EXACT, mpmath.mpf(0), normal)
    while True:
        bits = t.cast(int, normal.precision_bits)
        with mpmath.mp.workprec(bits):
            g, m, residual = _numeric_canonical(pencil, normal)
            if residual < mpmath.ldexp(1, -(bits // 2)):
                return CanonicalForm(g, m, Path.CERTIFIED_NUMERIC, residual, normal)
        if bits >= MAX_PRECISION_BITS:
            raise CertificationError(f"canonical form residual {residual} does not certify")
        LOG.debug("canonical form residual too large at %d bits", bits)
        normal = nodal_normalize(pencil, min(2 * bits, MAX_PRECISION_BITS))


def _numeric_canonical(
    pencil: Pencil, normal: NodalFormResult
) -> t.Tuple[mpmath.matrix, mpmath.matrix, mpmath.mpf]:
    a, b = (_numeric_value(value) for value in (normal.a, normal.b))
    delta = 1 / (b - a)
    gamma = 1 - delta * a
    shear = mpmath.eye(4)
    shear[3, 3] = 1 / delta
    shear[3, 0] = -gamma / delta
    g = shear.T * normal.g
    m = mpmath.matrix([[1, 0], [gamma, delta]]) * to_mp_matrix(normal.m)
    first = m[0, 0] * to_mp_matrix(pencil.Q0) + m[0, 1] * to_mp_matrix(pencil.Q1)
    second = m[1, 0] * to_mp_matrix(pencil.Q0) + m[1, 1] * to_mp_matrix(pencil.Q1)
    first_target, second_target = _target(1, 2)
    residual = max(
        max_abs(g * first * g.T - first_target),
        max_abs(g * second * g.T - second_target),
    )
    return g, m, residual


def _numeric_value(value: Coefficient) -> t.Any:
    if isinstance(value, CRoot):
        return value.approximation
    return mp_rational(value)
