# SPDX-FileCopyrightText: 2020-2023 CERN
# SPDX-FileCopyrightText: 2023 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Implementation of the subcommands.

Every command takes the parsed arguments and returns a JSON-ready
mapping. Each mapping carries a ``"claim"`` naming the statement its
numbers instantiate.
"""

from __future__ import annotations

import argparse
import typing as t
from logging import getLogger

import sympy as sp

from . import moduli, schubert
from .core_algebra import BinaryQuartic, invariants, j_invariant, root_type
from .errors import CertificationError, PreconditionError
from .normal_forms import nodal_canonicalize, nodal_normalize, simultaneous_diagonalize, verify_node
from .pencil import Pencil, classify, discriminant_quartic, infinitesimal_stabilizer_dim, singular_members
from .schemas import PencilModel, SliceModel, load_model, to_json
from .slice_lab import (
    CampaignReport,
    expected_tangent_count,
    slice_campaign,
    slice_report,
    trial_deviations,
)
from .utils.coerce_rational import coerce_rational_tuple

__all__ = [
    "COMMANDS",
    "CLAIMS",
    "SliceDeviation",
    "campaign_payload",
    "parse_pairing",
    "parse_values",
    "report",
]

LOG = getLogger(__name__)

Payload = t.Dict[str, t.Any]

CLAIMS = {
    "classify": "orbit classification of pencils by discriminant root type and singular members",
    "diagonalize": "a smooth pencil is congruent to a diagonal pencil",
    "nodal-form": "a tangent pencil of type 2+1+1 reduces to the two-parameter nodal family",
    "nodal-canon": "all tangent pencils of type 2+1+1 lie in the orbit of W_node",
    "verify-node": "the base curve of W_node has an ordinary node",
    "stabilizer": "every orbit of smooth pencils has dimension 15",
    "jmap": "the j-invariant of the discriminant quartic",
    "legendre": "j in terms of the Legendre parameter",
    "ramification": "the j-map on the Legendre line ramifies with index 2 over 1728 and 3 over 0",
    "fiber-structure": "multiplicities of the fibers of j over the CM values",
    "schubert": "sigma1 times sigma_{8,7} is the class of a point",
    "slice-verify": "twelve simple tangent lines through a general point, and j has degree 12 on the slice",
    "report": "the classes of the j-fibers, of the CM orbit closures and of the tangent locus",
}


class SliceDeviation(CertificationError):
    """A hand-built slice is not general or has unexpected counts."""

    def __init__(self, payload: Payload) -> None:
        super().__init__("; ".join(payload["deviations"]))
        self.payload = payload


def parse_values(text: str) -> t.Tuple[sp.Rational, ...]:
    """Parse a comma-separated list of rationals.

    Examples:

        >>> parse_values("5,-3,1/2")
        (5, -3, 1/2)
    """
    try:
        return coerce_rational_tuple(item for item in text.split(",") if item.strip())
    except ValueError as exc:
        raise PreconditionError(f"not a list of rationals: {text!r}") from exc


def parse_pairing(text: str, n: int) -> schubert.Partition2:
    """Parse ``sigma1:a,b`` into the partition (a, b) on Gr(2, n).

    Examples:

        >>> parse_pairing("sigma1:8,7", 10)
        Partition2(a=8, b=7, n=10)
    """
    prefix, _, indices = text.partition(":")
    try:
        a, b = (int(index) for index in indices.split(","))
    except ValueError as exc:
        raise PreconditionError(f"expected sigma1:a,b, got {text!r}") from exc
    if prefix != "sigma1":
        raise PreconditionError(f"only products with sigma1 are supported, got {text!r}")
    return schubert.Partition2(a, b, n)


def _pencil(args: argparse.Namespace) -> Pencil:
    if args.input is None:
        raise PreconditionError(f"{args.command} needs --input with a pencil")
    return load_model(PencilModel, args.input).to_pencil()


def _classify(args: argparse.Namespace) -> Payload:
    pencil = _pencil(args)
    verdict = classify(pencil, args.precision_bits)
    return {
        "claim": CLAIMS["classify"],
        "tag": verdict.tag,
        "j": verdict.j,
        "root_type": verdict.root_type,
        "diagnostics": verdict.diagnostics,
        "singular_members": singular_members(pencil, args.precision_bits),
    }


def _diagonalize(args: argparse.Namespace) -> Payload:
    result = simultaneous_diagonalize(_pencil(args), args.precision_bits)
    return {"claim": CLAIMS["diagonalize"], **to_json(result)}


def _nodal_form(args: argparse.Namespace) -> Payload:
    result = nodal_normalize(_pencil(args), args.precision_bits)
    return {"claim": CLAIMS["nodal-form"], **to_json(result)}


def _nodal_canon(args: argparse.Namespace) -> Payload:
    result = nodal_canonicalize(_pencil(args), args.precision_bits)
    return {"claim": CLAIMS["nodal-canon"], **to_json(result)}


def _verify_node(args: argparse.Namespace) -> Payload:
    result = verify_node(_pencil(args), args.precision_bits)
    return {
        "claim": CLAIMS["verify-node"],
        **to_json(result),
        "unique": result.unique,
        "arithmetic_genus": result.arithmetic_genus,
        "geometric_genus": result.geometric_genus,
    }


def _stabilizer(args: argparse.Namespace) -> Payload:
    result = infinitesimal_stabilizer_dim(_pencil(args))
    return {
        "claim": CLAIMS["stabilizer"],
        "lie_algebra_dim": result.lie_algebra_dim,
        "orbit_dim": result.orbit_dim,
    }


def _jmap(args: argparse.Namespace) -> Payload:
    if (args.input is None) == (args.quartic is None):
        raise PreconditionError("jmap needs exactly one of --input and --quartic")
    if args.quartic is not None:
        quartic = BinaryQuartic(parse_values(args.quartic))
    else:
        quartic = discriminant_quartic(_pencil(args))
    return {
        "claim": CLAIMS["jmap"],
        "quartic": quartic,
        "invariants": invariants(quartic),
        "root_type": root_type(quartic),
        "j": j_invariant(quartic),
    }


def _legendre(args: argparse.Namespace) -> Payload:
    if args.roots is not None:
        roots = [item.strip() for item in args.roots.split(",")]
        lam = moduli.cross_ratio_lambda(roots)
    else:
        lam = args.lambda_value
    if lam == "oo" or lam in (0, 1):
        raise PreconditionError(f"lambda must be finite and differ from 0 and 1, got {lam!r}")
    return {
        "claim": CLAIMS["legendre"],
        "lambda": lam,
        "j": moduli.legendre_j(lam),
        "quartic": moduli.legendre_quartic(lam),
        "orbit": moduli.lambda_orbit(lam),
    }


def _ramification(_: argparse.Namespace) -> Payload:
    total, expected = moduli.riemann_hurwitz_balance()
    return {
        "claim": CLAIMS["ramification"],
        "critical_points": moduli.legendre_ramification(),
        "poles": moduli.legendre_poles(),
        "riemann_hurwitz": {"total": total, "expected": expected},
    }


def _fiber_structure(args: argparse.Namespace) -> Payload:
    fiber = moduli.fiber_structure(args.value)
    return {
        "claim": CLAIMS["fiber-structure"],
        **to_json(fiber),
        "reduced_class_coeff": fiber.reduced_class_coeff,
    }


def _schubert(args: argparse.Namespace) -> Payload:
    if args.plucker:
        return {
            "claim": "degree of Gr(2, n) in the Plücker embedding",
            "degree": schubert.plucker_degree(args.n),
        }
    product = schubert.pieri_sigma1(parse_pairing(args.pairing, args.n))
    return {"claim": CLAIMS["schubert"], "product": product, "degree": schubert.degree(product)}


def campaign_payload(campaign: CampaignReport) -> Payload:
    return {
        "n_trials": campaign.n_trials,
        "seed": campaign.seed,
        "height": campaign.height,
        "test_values": campaign.test_values,
        "expected_count": campaign.expected_count,
        "max_retries": campaign.max_retries,
        "trials": campaign.trials,
        "deviations": campaign.deviations,
    }


def _slice_verify(args: argparse.Namespace) -> Payload:
    if args.input is not None:
        verdict = slice_report(load_model(SliceModel, args.input).to_slice(), args.values)
        payload = {
            "claim": CLAIMS["slice-verify"],
            "report": verdict,
            "deviations": trial_deviations(verdict, expected_tangent_count()),
        }
        if payload["deviations"]:
            raise SliceDeviation(payload)
        return payload
    campaign = slice_campaign(
        args.trials, args.seed, args.height, args.values, workers=args.workers
    )
    return {"claim": CLAIMS["slice-verify"], **campaign_payload(campaign)}


def _uniform_count(counts: t.Iterable[int]) -> int:
    distinct = set(counts)
    if len(distinct) != 1:
        raise AssertionError(f"campaign counts are not uniform: {sorted(distinct)}")
    return distinct.pop()


# Named divisors and the point of the j-line they lie over.
_DIVISORS = (("F_a", None), ("O_1728", 1728), ("O_0", 0), ("T", "oo"))


def report(args: argparse.Namespace) -> Payload:
    """Assemble the four divisor classes from a campaign and the ramification.

    The slice count of a class is the number of points of the slice
    curve in it: j-fiber counts for F_a and the CM orbits, tangent counts
    for T. The reduced classes divide by the fiber multiplicities.

    Raises:
        PreconditionError: if no test value lies off the CM values 0 and
            1728, so there is no generic fiber to count.
    """
    generic_a = next((a for a in args.values if a not in (0, 1728)), None)
    if generic_a is None:
        raise PreconditionError(f"need a test value other than 0 and 1728, got {list(args.values)!r}")
    values = tuple(args.values) + tuple(
        sp.Integer(a) for _, a in _DIVISORS if isinstance(a, int) and a not in args.values
    )
    campaign = slice_campaign(args.trials, args.seed, args.height, values, workers=args.workers)
    tangents = _uniform_count(trial.tangent_count_with_multiplicity for trial in campaign.trials)
    classes: Payload = {}
    provenance: Payload = {}
    for name, a in _DIVISORS:
        fiber_over = generic_a if a is None else a
        if a == "oo":
            count = tangents
        else:
            key = sp.Integer(fiber_over) if isinstance(fiber_over, int) else fiber_over
            count = _uniform_count(trial.j_fiber_counts[key] for trial in campaign.trials)
        divisor = schubert.divisor_class_report(count, fiber_over)
        classes[name] = f"{divisor.reduced_class.coefficient(1, 0)}σ1"
        provenance[name] = {
            "over": fiber_over,
            "slice_count": count,
            "multiplicity": divisor.multiplicity,
            "fiber_class": divisor.fiber_class,
            "reduced_class": divisor.reduced_class,
        }
    total, expected = moduli.riemann_hurwitz_balance()
    n = schubert.PENCIL_GRASSMANNIAN
    return {
        "claim": CLAIMS["report"],
        "classes": classes,
        "provenance": provenance,
        "pairing": schubert.degree(schubert.pieri_sigma1(schubert.Partition2(n - 2, n - 3, n))),
        "ramification": {
            "critical_points": moduli.legendre_ramification(),
            "riemann_hurwitz": {"total": total, "expected": expected},
        },
        "campaign": {key: value for key, value in campaign_payload(campaign).items() if key != "trials"},
    }


COMMANDS: t.Dict[str, t.Callable[[argparse.Namespace], Payload]] = {
    "classify": _classify,
    "diagonalize": _diagonalize,
    "nodal-form": _nodal_form,
    "nodal-canon": _nodal_canon,
    "verify-node": _verify_node,
    "stabilizer": _stabilizer,
    "jmap": _jmap,
    "legendre": _legendre,
    "ramification": _ramification,
    "fiber-structure": _fiber_structure,
    "schubert": _schubert,
    "slice-verify": _slice_verify,
    "report": report,
}
