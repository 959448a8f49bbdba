# SPDX-FileCopyrightText: 2020-2023 CERN
# SPDX-FileCopyrightText: 2023 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Tangent lines and j-fibers on plane slices of the space of quadrics."""

from ._campaign import (
    DEFAULT_SEED,
    DEFAULT_TEST_VALUES,
    DEFAULT_TRIALS,
    CampaignDeviation,
    CampaignReport,
    catching_exceptions,
    run_trial,
    slice_campaign,
    trial_deviations,
)
from ._slice import (
    DEFAULT_HEIGHT,
    RETRY_BOUND,
    GenericityExhausted,
    InvalidSlice,
    PlaneSlice,
    PoleValue,
    SliceInvariants,
    SliceReport,
    count_tangents,
    expected_tangent_count,
    generic_slice,
    genericity_failures,
    j_fiber_count,
    random_slice,
    slice_invariants,
    slice_report,
    tangent_pencil,
    tangent_polynomial,
)

__all__ = [
    "CampaignDeviation",
    "CampaignReport",
    "DEFAULT_HEIGHT",
    "DEFAULT_SEED",
    "DEFAULT_TEST_VALUES",
    "DEFAULT_TRIALS",
    "GenericityExhausted",
    "InvalidSlice",
    "PlaneSlice",
    "PoleValue",
    "RETRY_BOUND",
    "SliceInvariants",
    "SliceReport",
    "catching_exceptions",
    "count_tangents",
    "expected_tangent_count",
    "generic_slice",
    "genericity_failures",
    "j_fiber_count",
    "random_slice",
    "run_trial",
    "slice_campaign",
    "slice_invariants",
    "slice_report",
    "tangent_pencil",
    "tangent_polynomial",
]
