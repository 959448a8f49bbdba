# SPDX-FileCopyrightText: 2020-2023 CERN
# SPDX-FileCopyrightText: 2023 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""JSON input schemas and the JSON encoding of results.

Rationals travel as integers or strings ``"num/den"``; floats are
rejected. On output, every rational is written as ``"num/den"`` and
every certified approximation as a decimal string accompanied by the
precision it was certified at.
"""

from __future__ import annotations

import dataclasses
import enum
import functools
import json
import sys
import typing as t
from pathlib import Path

import mpmath
import pydantic
import sympy as sp
from mpmath.libmp import prec_to_dps

from .core_algebra import BinaryQuartic, CRoot, RootType
from .moduli import AlgebraicPoint
from .pencil import Pencil
from .schubert import ClassSum, Partition2
from .slice_lab import PlaneSlice
from .utils.coerce_rational import coerce_rational, format_rational

__all__ = [
    "PencilModel",
    "SliceModel",
    "dumps",
    "format_location",
    "load_model",
    "to_json",
]

ModelT = t.TypeVar("ModelT", bound=pydantic.BaseModel)

ExactRational = t.Annotated[sp.Rational, pydantic.BeforeValidator(coerce_rational)]
Row = t.Annotated[t.List[ExactRational], pydantic.Field(min_length=4, max_length=4)]
Matrix4 = t.Annotated[t.List[Row], pydantic.Field(min_length=4, max_length=4)]


class PencilModel(pydantic.BaseModel):
    """A pencil as ``{"Q0": [[...]*4]*4, "Q1": ...}``."""

    model_config = pydantic.ConfigDict(extra="forbid", frozen=True, arbitrary_types_allowed=True)

    Q0: Matrix4  # pylint: disable = invalid-name
    Q1: Matrix4  # pylint: disable = invalid-name

    def to_pencil(self) -> Pencil:
        return Pencil(sp.ImmutableMatrix(self.Q0), sp.ImmutableMatrix(self.Q1))


class SliceModel(pydantic.BaseModel):
    """A plane slice as ``{"span": [M0, M1, M2], "q_coeffs": [q0, q1, q2]}``."""

    model_config = pydantic.ConfigDict(extra="forbid", frozen=True, arbitrary_types_allowed=True)

    span: t.Annotated[t.List[Matrix4], pydantic.Field(min_length=3, max_length=3)]
    q_coeffs: t.Annotated[t.List[ExactRational], pydantic.Field(min_length=3, max_length=3)]
    seed: t.Optional[int] = None

    def to_slice(self) -> PlaneSlice:
        first, second, third = (sp.ImmutableMatrix(matrix) for matrix in self.span)
        q0, q1, q2 = self.q_coeffs
        return PlaneSlice((first, second, third), (q0, q1, q2), seed=self.seed)


def load_model(model: t.Type[ModelT], path: t.Union[str, Path]) -> ModelT:
    """Validate the JSON document at *path*; ``"-"`` reads standard input.

    Raises:
        pydantic.ValidationError: if the document violates the schema.
    """
    text = sys.stdin.read() if str(path) == "-" else Path(path).read_text(encoding="utf-8")
    return model.model_validate_json(text)


def format_location(loc: t.Sequence[t.Union[int, str]]) -> str:
    """Render a pydantic error location as a JSON path.

    Examples:

        >>> format_location(("Q0", 1, 2))
        '$.Q0[1][2]'
        >>> format_location(())
        '$'
    """
    parts = ["$"]
    for item in loc:
        parts.append(f"[{item}]" if isinstance(item, int) else f".{item}")
    return "".join(parts)


@functools.singledispatch
def to_json(value: t.Any) -> t.Any:
    """Convert a result to plain JSON data.

    Dataclasses become objects with one key per field.

    Examples:

        >>> to_json({"j": sp.Rational(3, 4), "tag": None, "pair": (sp.Integer(2), sp.oo)})
        {'j': '3/4', 'tag': None, 'pair': ['2/1', 'oo']}
    """
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {field.name: to_json(getattr(value, field.name)) for field in dataclasses.fields(value)}
    raise TypeError(f"cannot encode {type(value).__name__} as JSON")


@to_json.register(type(None))
@to_json.register(bool)
@to_json.register(int)
@to_json.register(str)
def _(value: t.Any) -> t.Any:
    return value


@to_json.register(list)
@to_json.register(tuple)
def _(value: t.Sequence[t.Any]) -> t.Any:
    return [to_json(item) for item in value]


@to_json.register(dict)
def _(value: t.Mapping[t.Any, t.Any]) -> t.Any:
    return {
        key if isinstance(key, str) else to_json(key): to_json(item) for key, item in value.items()
    }


@to_json.register(sp.Rational)
def _(value: sp.Rational) -> t.Any:
    return format_rational(value)


@to_json.register(type(sp.oo))
def _(value: t.Any) -> t.Any:
    return "oo"


@to_json.register(sp.Expr)
def _(value: sp.Expr) -> t.Any:
    return str(value)


@to_json.register(sp.ImmutableMatrix)
@to_json.register(sp.MatrixBase)
def _(value: sp.MatrixBase) -> t.Any:
    return to_json(value.tolist())


@to_json.register(sp.Poly)
def _(value: sp.Poly) -> t.Any:
    return {
        "variable": str(value.gen),
        "coefficients": to_json(value.all_coeffs()[::-1]),
    }


@to_json.register(enum.Enum)
def _(value: enum.Enum) -> t.Any:
    return value.value


@to_json.register(mpmath.mpf)
def _(value: t.Any) -> t.Any:
    return mpmath.nstr(value, mpmath.mp.dps)


@to_json.register(mpmath.mpc)
def _(value: t.Any) -> t.Any:
    return {"re": to_json(value.real), "im": to_json(value.imag)}


@to_json.register(mpmath.matrix)
def _(value: t.Any) -> t.Any:
    return [[to_json(value[i, j]) for j in range(value.cols)] for i in range(value.rows)]


@to_json.register(CRoot)
def _(value: CRoot) -> t.Any:
    with mpmath.mp.workprec(value.precision_bits):
        digits = prec_to_dps(value.precision_bits)
        return {
            "approximation": {
                "re": mpmath.nstr(value.approximation.real, digits),
                "im": mpmath.nstr(value.approximation.imag, digits),
            },
            "error_radius": mpmath.nstr(value.error_radius, 5),
            "multiplicity": value.multiplicity,
            "precision_bits": value.precision_bits,
            "exact": to_json(value.exact),
        }


@to_json.register(BinaryQuartic)
def _(value: BinaryQuartic) -> t.Any:
    return {"c": to_json(value.c), "form": str(value)}


@to_json.register(RootType)
def _(value: RootType) -> t.Any:
    return str(value)


@to_json.register(Pencil)
def _(value: Pencil) -> t.Any:
    return {"Q0": to_json(value.Q0), "Q1": to_json(value.Q1)}


@to_json.register(AlgebraicPoint)
def _(value: AlgebraicPoint) -> t.Any:
    return {
        "minimal_polynomial": to_json(value.minimal_polynomial),
        "root_index": value.root_index,
        "approximation": to_json(value.approximation()),
    }


@to_json.register(Partition2)
def _(value: Partition2) -> t.Any:
    return str(value)


@to_json.register(ClassSum)
def _(value: ClassSum) -> t.Any:
    return {"n": value.n, "terms": {str(part): coeff for part, coeff in value.terms.items()}}


def dumps(value: t.Any) -> str:
    """Encode *value* deterministically: sorted keys, fixed indentation."""
    return json.dumps(to_json(value), sort_keys=True, indent=2, ensure_ascii=False)
