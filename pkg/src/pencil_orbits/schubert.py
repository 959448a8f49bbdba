# SPDX-FileCopyrightText: 2020-2023 CERN
# SPDX-FileCopyrightText: 2023 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Schubert classes on Gr(2, n) and multiplication by σ₁.

Only the Pieri rule for σ₁ is provided. It is enough to pair divisor
classes against the curve class σ_{n−2,n−3} and to compute the degree
of the Grassmannian by iterating it from the fundamental class.
"""

from __future__ import annotations

import collections
import dataclasses
import typing as t

from .errors import PreconditionError
from .moduli import fiber_structure
from .utils.typecheck import ProjectiveValue

__all__ = [
    "ClassSum",
    "DivisorClassReport",
    "InvalidPartition",
    "MixedGrassmannians",
    "NonDivisibleMultiplicity",
    "NotTopDegree",
    "Partition2",
    "degree",
    "divisor_class_report",
    "fundamental_class",
    "pieri_sigma1",
    "plucker_degree",
    "sigma",
    "sigma1",
]


class InvalidPartition(PreconditionError):
    """The partition does not fit in the (n − 2) × 2 box."""


class MixedGrassmannians(PreconditionError):
    """Classes on different Grassmannians were combined."""


class NotTopDegree(PreconditionError):
    """Only classes of top codimension have a degree."""


class NonDivisibleMultiplicity(PreconditionError):
    """The fiber multiplicity does not divide the fiber class."""


@dataclasses.dataclass(frozen=True, order=True)
class Partition2:
    """The index (a, b) of the Schubert class σ_{a,b} on Gr(2, n)."""

    a: int
    b: int
    n: int

    def __post_init__(self) -> None:
        if not self.n - 2 >= self.a >= self.b >= 0:
            raise InvalidPartition(
                f"need n - 2 >= a >= b >= 0, got (a, b) = ({self.a!r}, {self.b!r}) on Gr(2, {self.n!r})"
            )

    @property
    def codimension(self) -> int:
        return self.a + self.b

    def __str__(self) -> str:
        return f"{self.a},{self.b}"


@dataclasses.dataclass(frozen=True)
class ClassSum:
    """An integer combination of Schubert classes of one codimension.

    Zero coefficients are dropped on construction. The empty sum
    still remembers its Grassmannian.

    Examples:

        >>> total = sigma(2, 0, n=4) + sigma(1, 1, n=4)
        >>> print(3 * total)
        3σ_{1,1} + 3σ_{2,0}
        >>> sigma(1, 0, n=4) + sigma(1, 0, n=5)
        Traceback (most recent call last):
        ...
        MixedGrassmannians: cannot combine Gr(2, 4) with Gr(2, 5)
    """

    n: int
    terms: t.Mapping[Partition2, int] = dataclasses.field(default_factory=dict)

    def __post_init__(self) -> None:
        terms = {part: coeff for part, coeff in sorted(self.terms.items()) if coeff != 0}
        for part in terms:
            if part.n != self.n:
                raise MixedGrassmannians(f"cannot combine Gr(2, {self.n}) with Gr(2, {part.n})")
        if len({part.codimension for part in terms}) > 1:
            raise PreconditionError(f"mixed codimensions in {terms!r}")
        object.__setattr__(self, "terms", terms)

    @property
    def codimension(self) -> t.Optional[int]:
        return next((part.codimension for part in self.terms), None)

    def coefficient(self, a: int, b: int) -> int:
        return self.terms.get(Partition2(a, b, self.n), 0)

    def __add__(self, other: ClassSum) -> ClassSum:
        if not isinstance(other, ClassSum):
            return NotImplemented
        if other.n != self.n:
            raise MixedGrassmannians(f"cannot combine Gr(2, {self.n}) with Gr(2, {other.n})")
        total: t.Counter[Partition2] = collections.Counter(self.terms)
        total.update(other.terms)
        return ClassSum(self.n, dict(total))

    def __rmul__(self, scalar: int) -> ClassSum:
        return ClassSum(self.n, {part: scalar * coeff for part, coeff in self.terms.items()})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"{'' if coeff == 1 else coeff}σ_{{{part}}}" for part, coeff in self.terms.items()
        )


def sigma(a: int, b: int = 0, *, n: int) -> ClassSum:
    """Return the single class σ_{a,b} on Gr(2, n)."""
    return ClassSum(n, {Partition2(a, b, n): 1})


def sigma1(n: int) -> ClassSum:
    """Return the divisor class σ₁ = σ_{1,0}."""
    return sigma(1, 0, n=n)


def fundamental_class(n: int) -> ClassSum:
    return sigma(0, 0, n=n)


def pieri_sigma1(classes: t.Union[Partition2, ClassSum]) -> ClassSum:
    """Multiply by σ₁: add one box to each partition in every valid way.

    Examples:

        >>> print(pieri_sigma1(Partition2(1, 0, 4)))
        σ_{1,1} + σ_{2,0}
        >>> print(pieri_sigma1(Partition2(8, 7, 10)))
        σ_{8,8}
        >>> print(pieri_sigma1(Partition2(8, 8, 10)))
        0
    """
    if isinstance(classes, Partition2):
        classes = ClassSum(classes.n, {classes: 1})
    product: t.Counter[Partition2] = collections.Counter()
    for part, coeff in classes.terms.items():
        a, b, n = part.a, part.b, part.n
        if a + 1 <= n - 2:
            product[Partition2(a + 1, b, n)] += coeff
        if b + 1 <= a:
            product[Partition2(a, b + 1, n)] += coeff
    return ClassSum(classes.n, dict(product))


def degree(classes: ClassSum) -> int:
    """Return the coefficient of the point class σ_{n−2,n−2}.

    Raises:
        NotTopDegree: if *classes* is nonzero below top codimension.

    Examples:

        >>> degree(pieri_sigma1(Partition2(8, 7, 10)))
        1
        >>> degree(3 * sigma(8, 8, n=10))
        3
    """
    top = 2 * (classes.n - 2)
    if classes.codimension not in (None, top):
        raise NotTopDegree(f"codimension {classes.codimension!r} is not {top} on Gr(2, {classes.n})")
    return classes.coefficient(classes.n - 2, classes.n - 2)


def plucker_degree(n: int) -> int:
    """Return the degree of Gr(2, n) in the Plücker embedding.

    Computed as σ₁^{2(n−2)} by iterating the Pieri rule.

    Examples:

        >>> plucker_degree(4), plucker_degree(10)
        (2, 1430)
    """
    classes = fundamental_class(n)
    for _ in range(2 * (n - 2)):
        classes = pieri_sigma1(classes)
    return degree(classes)


@dataclasses.dataclass(frozen=True)
class DivisorClassReport:
    """Classes of a j-fiber on Gr(2, 10) and of its reduction.

    Attributes:
        a: The j-value.
        slice_count: Intersection number with the curve class σ_{8,7}.
        multiplicity: Multiplicity of the fiber over *a*.
        fiber_class: ``slice_count · σ₁``.
        reduced_class: ``slice_count / multiplicity · σ₁``.
    """

    a: ProjectiveValue
    slice_count: int
    multiplicity: int
    fiber_class: ClassSum
    reduced_class: ClassSum


# Pencils of quadrics in P³ are lines in the P⁹ of quadrics.
PENCIL_GRASSMANNIAN = 10


def divisor_class_report(slice_count: int, a: t.Any) -> DivisorClassReport:
    """Assemble the class of the j-fiber over *a* from a slice count.

    A divisor class on Gr(2, 10) is m·σ₁ with m its degree against the
    curve class σ_{8,7}; σ₁·σ_{8,7} = 1 makes m the slice count.

    Examples:

        >>> report = divisor_class_report(12, 1728)
        >>> print(report.fiber_class, "|", report.reduced_class)
        12σ_{1,0} | 6σ_{1,0}
        >>> divisor_class_report(13, 0)
        Traceback (most recent call last):
        ...
        NonDivisibleMultiplicity: fiber multiplicity 3 does not divide 13
    """
    n = PENCIL_GRASSMANNIAN
    pairing = degree(pieri_sigma1(Partition2(n - 2, n - 3, n)))
    coefficient = slice_count * pairing
    fiber = fiber_structure(a)
    if coefficient % fiber.multiplicity:
        raise NonDivisibleMultiplicity(
            f"fiber multiplicity {fiber.multiplicity} does not divide {coefficient}"
        )
    return DivisorClassReport(
        a=fiber.a,
        slice_count=slice_count,
        multiplicity=fiber.multiplicity,
        fiber_class=coefficient * sigma1(n),
        reduced_class=(coefficient // fiber.multiplicity) * sigma1(n),
    )
