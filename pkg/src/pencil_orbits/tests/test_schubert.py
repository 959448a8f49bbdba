# SPDX-FileCopyrightText: 2020-2023 CERN
# SPDX-FileCopyrightText: 2023 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

# pylint: disable = missing-function-docstring
# pylint: disable = missing-class-docstring

"""Tests for `pencil_orbits.schubert`."""

import pytest

from pencil_orbits.schubert import (
    PENCIL_GRASSMANNIAN,
    InvalidPartition,
    MixedGrassmannians,
    NonDivisibleMultiplicity,
    NotTopDegree,
    Partition2,
    degree,
    divisor_class_report,
    fundamental_class,
    pieri_sigma1,
    plucker_degree,
    sigma,
    sigma1,
)


@pytest.mark.parametrize("a, b, n", [(1, 2, 4), (3, 0, 4), (-1, -1, 5), (0, 0, 1)])
def test_invalid_partitions(a: int, b: int, n: int) -> None:
    with pytest.raises(InvalidPartition):
        Partition2(a, b, n)


def test_pieri_rule_on_gr_2_4() -> None:
    square = pieri_sigma1(sigma1(4))
    assert square.coefficient(2, 0) == 1
    assert square.coefficient(1, 1) == 1
    assert pieri_sigma1(square).coefficient(2, 1) == 2
    assert degree(pieri_sigma1(pieri_sigma1(square))) == 2


def test_curve_class_pairs_to_one_with_divisor() -> None:
    n = PENCIL_GRASSMANNIAN
    assert degree(pieri_sigma1(Partition2(n - 2, n - 3, n))) == 1


@pytest.mark.parametrize("n, expected", [(3, 1), (4, 2), (5, 5), (6, 14), (10, 1430)])
def test_plucker_degree_is_catalan(n: int, expected: int) -> None:
    assert plucker_degree(n) == expected


def test_class_sums_refuse_mixed_input() -> None:
    with pytest.raises(MixedGrassmannians):
        _ = sigma1(4) + sigma1(5)
    with pytest.raises(NotTopDegree):
        degree(sigma1(10))
    assert degree(0 * sigma(8, 8, n=10)) == 0
    assert str(fundamental_class(10)) == "σ_{0,0}"


def test_divisor_class_report() -> None:
    report = divisor_class_report(12, 0)
    assert report.multiplicity == 3
    assert report.fiber_class.coefficient(1, 0) == 12
    assert report.reduced_class.coefficient(1, 0) == 4
    generic = divisor_class_report(12, 5)
    assert generic.reduced_class == generic.fiber_class
    with pytest.raises(NonDivisibleMultiplicity):
        divisor_class_report(11, 1728)
