# SPDX-FileCopyrightText: 2020-2023 CERN
# SPDX-FileCopyrightText: 2023 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

# pylint: disable = missing-function-docstring
# pylint: disable = missing-class-docstring
# pylint: disable = redefined-outer-name

"""Tests for `pencil_orbits.slice_lab`."""

import logging

import pytest
import sympy as sp

from pencil_orbits.core_algebra import U
from pencil_orbits.errors import PreconditionError
from pencil_orbits.pencil import OrbitTag, classify
from pencil_orbits.slice_lab import (
    DEFAULT_TEST_VALUES,
    CampaignDeviation,
    InvalidSlice,
    PlaneSlice,
    PoleValue,
    catching_exceptions,
    count_tangents,
    generic_slice,
    genericity_failures,
    j_fiber_count,
    random_slice,
    slice_campaign,
    slice_invariants,
    slice_report,
    tangent_pencil,
    tangent_polynomial,
    trial_deviations,
)

X0X3 = sp.Matrix([[0, 0, 0, sp.Rational(1, 2)], [0, 0, 0, 0], [0, 0, 0, 0], [sp.Rational(1, 2), 0, 0, 0]])


@pytest.fixture
def degenerate() -> PlaneSlice:
    # Lines through q = I meet the pencil ⟨I, diag(1, 1, 0, 0)⟩ at u = 0.
    return PlaneSlice((sp.diag(1, 1, 0, 0), sp.diag(0, 0, 1, 1), X0X3), (1, 1, 0))


def test_plane_slice_rejects_degenerate_input() -> None:
    with pytest.raises(InvalidSlice):
        PlaneSlice((sp.eye(4), 2 * sp.eye(4), X0X3), (1, 0, 0))
    with pytest.raises(InvalidSlice):
        PlaneSlice((sp.diag(1, 1, 0, 0), sp.diag(0, 0, 1, 1), X0X3), (1, 0, 0))


def test_degenerate_slice_counts(degenerate: PlaneSlice) -> None:
    assert degenerate.line_basis() == ((1, 0, 0), (0, 0, 1))
    assert tangent_polynomial(degenerate).monic() == sp.Poly(U**10 + U**8, U)
    assert count_tangents(degenerate) == (12, False)
    assert genericity_failures(degenerate)
    report = slice_report(degenerate, [])
    assert report.tangent_poly_degree == 10
    assert not report.tangent_squarefree
    assert trial_deviations(report, 12)


def test_degenerate_slice_tangent_line(degenerate: PlaneSlice) -> None:
    verdict = classify(tangent_pencil(degenerate, 0))
    assert verdict.tag is OrbitTag.DEEPER_STRATUM
    assert verdict.root_type.partition == (2, 2)


def test_slice_invariants_rejects_unknown_chart(degenerate: PlaneSlice) -> None:
    with pytest.raises(PreconditionError):
        slice_invariants(degenerate, 2)


def test_random_slice_is_deterministic() -> None:
    assert random_slice(1) == random_slice(1)
    assert random_slice(1) != random_slice(2)
    assert random_slice(1).seed == 1


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_general_slice_counts(seed: int) -> None:
    sl = random_slice(seed)
    invariants = slice_invariants(sl)
    assert invariants.I.degree() <= 4
    assert invariants.J.degree() <= 6
    assert invariants.Delta.degree() == 12
    assert count_tangents(sl) == (12, True)
    assert genericity_failures(sl) == []
    for a in (5, -3, 1000, "1/2", 1728, 0):
        assert j_fiber_count(sl, a) == 12


def test_pole_value_is_rejected() -> None:
    sl = random_slice(1)
    with pytest.raises(PoleValue):
        j_fiber_count(sl, "oo")
    with pytest.raises(PoleValue):
        j_fiber_count(sl, sp.oo)


def test_generic_slice_rejects_small_height() -> None:
    with pytest.raises(PreconditionError):
        generic_slice(1, height=1)


def test_campaign() -> None:
    report = slice_campaign(100, seed=7, height=10, test_values=DEFAULT_TEST_VALUES)
    assert report.n_trials == 100
    assert report.expected_count == 12
    assert report.deviations == ()
    assert [trial.seed for trial in report.trials] == list(range(7, 107))
    for trial in report.trials:
        assert trial.tangent_count_with_multiplicity == 12
        assert trial.all_simple
        assert trial.j_fiber_counts == {5: 12, -3: 12, 1000: 12}


def test_campaign_is_reproducible() -> None:
    first = slice_campaign(3, seed=11, test_values=[5, -3])
    assert slice_campaign(3, seed=11, test_values=[5, -3]) == first
    assert slice_campaign(3, seed=11, test_values=[5, -3], workers=2) == first


def test_campaign_rejects_empty_run() -> None:
    with pytest.raises(PreconditionError):
        slice_campaign(0)


def test_campaign_deviation_carries_report() -> None:
    report = slice_campaign(1, seed=3)
    error = CampaignDeviation(report)
    assert error.report is report
    assert "0 of 1" in str(error)


def test_catching_exceptions(caplog: pytest.LogCaptureFixture) -> None:
    logger = logging.getLogger("pencil_orbits.tests")
    with caplog.at_level(logging.DEBUG, logger="pencil_orbits.tests"):
        with catching_exceptions("good", logger):
            pass
        with pytest.raises(ZeroDivisionError):
            with catching_exceptions("bad", logger):
                _ = 1 / 0
    assert [record.getMessage() for record in caplog.records] == ["finished good", "aborted bad"]
    assert caplog.records[1].levelno == logging.ERROR
