# SPDX-FileCopyrightText: 2020-2023 CERN
# SPDX-FileCopyrightText: 2023 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Seeded campaigns of slice trials."""

from __future__ import annotations

import concurrent.futures
import contextlib
import dataclasses
import functools
import typing as t
from logging import getLogger

import sympy as sp

from ..errors import CertificationError, PreconditionError
from ..utils.coerce_rational import coerce_rational_tuple
from ._slice import DEFAULT_HEIGHT, SliceReport, expected_tangent_count, generic_slice, slice_report

if t.TYPE_CHECKING:
    # pylint: disable = unused-import
    from logging import Logger

__all__ = [
    "CampaignDeviation",
    "CampaignReport",
    "DEFAULT_SEED",
    "DEFAULT_TEST_VALUES",
    "DEFAULT_TRIALS",
    "catching_exceptions",
    "run_trial",
    "slice_campaign",
    "trial_deviations",
]

LOG = getLogger(__name__)

DEFAULT_TRIALS = 100
DEFAULT_SEED = 7
DEFAULT_TEST_VALUES = (5, -3, 1000)


@dataclasses.dataclass(frozen=True)
class CampaignReport:
    """Outcome of `slice_campaign`.

    Attributes:
        n_trials: Number of trials.
        seed: Seed of the first trial; trial *i* uses ``seed + i``.
        height: Bound on the sampled integer entries.
        test_values: The j-values whose fibers were counted.
        expected_count: Tangents through a general point, d(d − 1).
        trials: One report per trial, in seed order.
        deviations: One line per trial whose counts differ from
            *expected_count*, with the data to reproduce it.
    """

    n_trials: int
    seed: int
    height: int
    test_values: t.Tuple[sp.Rational, ...]
    expected_count: int
    trials: t.Tuple[SliceReport, ...]
    deviations: t.Tuple[str, ...]

    @property
    def max_retries(self) -> int:
        return max((trial.retries for trial in self.trials), default=0)


class CampaignDeviation(CertificationError):
    """A general slice produced counts other than the expected one."""

    def __init__(self, report: CampaignReport) -> None:
        super().__init__(f"{len(report.deviations)} of {report.n_trials} trials deviated")
        self.report = report


@contextlib.contextmanager
def catching_exceptions(name: str, logger: Logger) -> t.Iterator[None]:
    """Log whether the block finished or aborted, then let errors through."""
    try:
        yield
        logger.debug("finished %s", name)
    except BaseException:
        logger.error("aborted %s", name, exc_info=True)
        raise


def run_trial(seed: int, height: int, test_values: t.Sequence[sp.Rational]) -> SliceReport:
    """Sample a general slice from *seed* and count on it."""
    with catching_exceptions(f"trial seed={seed}", LOG):
        sl, retries = generic_slice(seed, height)
        return slice_report(sl, test_values, retries=retries)


def trial_deviations(report: SliceReport, expected: int) -> t.List[str]:
    """Describe how *report* differs from *expected* counts."""
    problems = []
    if report.tangent_count_with_multiplicity != expected or not report.all_simple:
        problems.append(
            f"{report.tangent_count_with_multiplicity} tangents (all simple: {report.all_simple})"
        )
    problems.extend(
        f"{count} lines with j = {a}"
        for a, count in report.j_fiber_counts.items()
        if count != expected
    )
    problems.extend(report.genericity_failures)
    return problems


def slice_campaign(
    n_trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
    height: int = DEFAULT_HEIGHT,
    test_values: t.Iterable[t.Any] = DEFAULT_TEST_VALUES,
    *,
    workers: t.Optional[int] = None,
) -> CampaignReport:
    """Run *n_trials* independent slice trials with seeds ``seed + i``.

    With *workers* > 1, trials run in a process pool; the report lists
    them in seed order regardless.

    Raises:
        GenericityExhausted: if some seed yields no general slice.
        CampaignDeviation: if some trial's counts deviate; the exception
            carries the full report.
    """
    if n_trials < 1:
        raise PreconditionError(f"need at least one trial, got {n_trials!r}")
    values = coerce_rational_tuple(test_values)
    seeds = [seed + i for i in range(n_trials)]
    trial = functools.partial(run_trial, height=height, test_values=values)
    if workers is not None and workers > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
            trials = tuple(pool.map(trial, seeds))
    else:
        trials = tuple(map(trial, seeds))
    expected = expected_tangent_count()
    deviations = tuple(
        f"seed {report.seed}: {'; '.join(problems)}"
        for report in trials
        if (problems := trial_deviations(report, expected))
    )
    report = CampaignReport(
        n_trials=n_trials,
        seed=seed,
        height=height,
        test_values=values,
        expected_count=expected,
        trials=trials,
        deviations=deviations,
    )
    LOG.info("slice campaign: %d trials, %d deviations", n_trials, len(deviations))
    if deviations:
        raise CampaignDeviation(report)
    return report
