#!/usr/bin/env python

# SPDX-FileCopyrightText: 2020-2023 CERN
# SPDX-FileCopyrightText: 2023 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Main entry point of this package."""

from __future__ import annotations

import argparse
import logging
import sys
import typing as t
from importlib import metadata

import pydantic

from . import logging_setup
from .commands import COMMANDS, SliceDeviation, campaign_payload, parse_values
from .core_algebra import DEFAULT_PRECISION_BITS, MAX_PRECISION_BITS
from .errors import CertificationError, PreconditionError
from .schemas import dumps, format_location
from .slice_lab import (
    DEFAULT_HEIGHT,
    DEFAULT_SEED,
    DEFAULT_TEST_VALUES,
    DEFAULT_TRIALS,
    CampaignDeviation,
)
from .utils.coerce_rational import coerce_rational

if t.TYPE_CHECKING:
    # pylint: disable = unused-import, ungrouped-imports
    import os

LOG = logging.getLogger(__name__)

EXIT_PRECONDITION = 2
EXIT_CERTIFICATION = 3


def init_logging(log_to_file: bool, filename: t.Union[None, str, os.PathLike]) -> None:
    """Configure the `logging` module."""
    if log_to_file or filename is not None:
        handler = logging_setup.create_handler(filename)
        print("Logging to", handler.stream.name, file=sys.stderr)
        handlers: t.List[logging.Handler] = [handler]
    else:
        handlers = [logging.NullHandler()]
    # No level-based filtering on the root logger; we leave that to
    # `handler`.
    logging.basicConfig(level="NOTSET", handlers=handlers)
    logging.captureWarnings(True)


def _precision(text: str) -> int:
    bits = int(text)
    if not 64 <= bits <= MAX_PRECISION_BITS:
        raise argparse.ArgumentTypeError(f"must lie in [64, {MAX_PRECISION_BITS}], got {bits}")
    return bits


def _rational(text: str) -> t.Any:
    if text.strip() == "oo":
        return "oo"
    try:
        return coerce_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _values(text: str) -> t.Tuple[t.Any, ...]:
    try:
        return parse_values(text)
    except PreconditionError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _add_input(parser: argparse.ArgumentParser, what: str) -> None:
    parser.add_argument(
        "-i",
        "--input",
        metavar="PATH",
        help=f"JSON file with the {what}; pass - to read standard input",
    )


def _add_campaign(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--trials",
        type=int,
        default=DEFAULT_TRIALS,
        help=f"Number of slice trials (default: {DEFAULT_TRIALS})",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=DEFAULT_SEED,
        help=f"Seed of the first trial; trial i uses seed + i (default: {DEFAULT_SEED})",
    )
    parser.add_argument(
        "--height",
        type=int,
        default=DEFAULT_HEIGHT,
        help=f"Bound on the sampled integer entries (default: {DEFAULT_HEIGHT})",
    )
    parser.add_argument(
        "--values",
        type=_values,
        default=tuple(coerce_rational(a) for a in DEFAULT_TEST_VALUES),
        metavar="A,B,...",
        help="j-values whose fibers are counted (default: "
        + ",".join(str(a) for a in DEFAULT_TEST_VALUES)
        + ")",
    )
    parser.add_argument(
        "--workers",
        type=int,
        metavar="N",
        help="Run trials in a pool of N processes; output is identical",
    )


def get_parser() -> argparse.ArgumentParser:
    """Return the CLI argument parser."""
    # pylint: disable = too-many-locals
    parser = argparse.ArgumentParser(
        prog="pencil-orbits",
        description="Exact computations on pencils of quadrics in P³ and their j-invariant",
    )
    parser.add_argument(
        "--version",
        action="store_true",
        help="Print the package version and exit",
    )
    parser.add_argument(
        "--precision-bits",
        type=_precision,
        default=DEFAULT_PRECISION_BITS,
        metavar="BITS",
        help="Starting precision of certified numerics; it is doubled "
        f"on demand up to {MAX_PRECISION_BITS} (default: {DEFAULT_PRECISION_BITS})",
    )
    logger = parser.add_mutually_exclusive_group()
    logger.add_argument(
        "--enable-logging",
        dest="log_to_file",
        action="store_true",
        default=False,
        help="Log events to a new file under the temporary directory",
    )
    logger.add_argument(
        "--disable-logging",
        dest="log_to_file",
        action="store_false",
        help="Disable logging (this is the default)",
    )
    logger.add_argument(
        "--log-file",
        type=str,
        help='Location for logging; pass "-" to log to stderr',
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    for name, what in [
        ("classify", "Classify the orbit of a pencil"),
        ("diagonalize", "Simultaneously diagonalize a smooth pencil"),
        ("nodal-form", "Reduce a tangent pencil to the nodal family W(a, b)"),
        ("nodal-canon", "Map a tangent pencil to W_node"),
        ("verify-node", "Check the node of the base curve of a tangent pencil"),
        ("stabilizer", "Dimension of the infinitesimal stabilizer"),
    ]:
        _add_input(commands.add_parser(name, help=what, description=what), "pencil")
    jmap = commands.add_parser("jmap", help="j-invariant of a pencil or a binary quartic")
    _add_input(jmap, "pencil")
    jmap.add_argument(
        "--quartic",
        metavar="C0,...,C4",
        help="Coefficients of c0 s⁴ + c1 s³t + ... + c4 t⁴",
    )
    legendre = commands.add_parser("legendre", help="Legendre parameter and its j-invariant")
    which = legendre.add_mutually_exclusive_group(required=True)
    which.add_argument("--lambda", dest="lambda_value", type=_rational, metavar="VALUE")
    which.add_argument(
        "--roots",
        metavar="R1,R2,R3,R4",
        help="Four distinct points of P¹; oo is the point at infinity",
    )
    commands.add_parser("ramification", help="Ramification of j on the Legendre line")
    fiber = commands.add_parser("fiber-structure", help="Multiplicity of the j-fiber over a value")
    fiber.add_argument("--value", type=_rational, required=True, metavar="A")
    pairing = commands.add_parser("schubert", help="Pieri products on Gr(2, n)")
    pairing.add_argument("--pairing", default="sigma1:8,7", metavar="sigma1:A,B")
    pairing.add_argument("--n", type=int, default=10, help="Gr(2, n) (default: 10)")
    pairing.add_argument(
        "--plucker",
        action="store_true",
        help="Print the degree of Gr(2, n) instead",
    )
    slice_verify = commands.add_parser(
        "slice-verify", help="Count tangents and j-fibers on plane slices"
    )
    _add_campaign(slice_verify)
    _add_input(slice_verify, "slice; replaces the seeded campaign")
    _add_campaign(commands.add_parser("report", help="Assemble the table of divisor classes"))
    return parser


def _print_error(message: str) -> None:
    print(f"error: {message}", file=sys.stderr)


def main(argv: list) -> int:
    """Main function. Pass sys.argv."""
    parser = get_parser()
    args = parser.parse_args(argv[1:])
    if args.version:
        print(f"pencil-orbits v{metadata.version('pencil-orbits')}")
        return 0
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_PRECONDITION
    init_logging(log_to_file=args.log_to_file, filename=args.log_file)
    LOG.debug("running %s", args.command)
    try:
        payload = COMMANDS[args.command](args)
    except pydantic.ValidationError as exc:
        for error in exc.errors():
            _print_error(f"{format_location(error['loc'])}: {error['msg']}")
        return EXIT_PRECONDITION
    except (ValueError, OSError) as exc:
        _print_error(str(exc))
        return EXIT_PRECONDITION
    except CampaignDeviation as exc:
        _print_error(str(exc))
        print(dumps({"claim": "campaign deviated", **campaign_payload(exc.report)}))
        return EXIT_CERTIFICATION
    except SliceDeviation as exc:
        _print_error(str(exc))
        print(dumps(exc.payload))
        return EXIT_CERTIFICATION
    except CertificationError as exc:
        LOG.error("certification failed", exc_info=True)
        _print_error(str(exc))
        return EXIT_CERTIFICATION
    print(dumps(payload))
    return 0


def run() -> None:
    """Console-script entry point."""
    sys.exit(main(sys.argv))


if __name__ == "__main__":
    run()
