# SPDX-FileCopyrightText: 2020-2023 CERN
# SPDX-FileCopyrightText: 2023 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

# pylint: disable = missing-function-docstring
# pylint: disable = missing-class-docstring
# pylint: disable = redefined-outer-name

"""Tests for the command-line interface in `pencil_orbits.__main__`."""

import json
import typing as t
from pathlib import Path

import pytest

from pencil_orbits.__main__ import main

W_NODE_JSON = {
    "Q0": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0]],
    "Q1": [[0, 0, 0, "1/2"], [0, 1, 0, 0], [0, 0, 2, 0], ["1/2", 0, 0, 0]],
}

DIAGONAL_JSON = {
    "Q0": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
    "Q1": [[0, 0, 0, 0], [0, 1, 0, 0], [0, 0, 2, 0], [0, 0, 0, 3]],
}

DEGENERATE_SLICE_JSON = {
    "span": [
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
        [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
        [[0, 0, 0, "1/2"], [0, 0, 0, 0], [0, 0, 0, 0], ["1/2", 0, 0, 0]],
    ],
    "q_coeffs": [1, 1, 0],
}


@pytest.fixture
def write_json(tmp_path: Path) -> t.Callable[[t.Any], str]:
    def write(document: t.Any) -> str:
        path = tmp_path / "input.json"
        path.write_text(json.dumps(document), encoding="utf-8")
        return str(path)

    return write


def run(capsys: pytest.CaptureFixture, *args: str) -> t.Tuple[int, t.Any, str]:
    status = main(["pencil-orbits", *args])
    captured = capsys.readouterr()
    payload = json.loads(captured.out) if captured.out.strip() else None
    return status, payload, captured.err


def test_classify_w_node(capsys: pytest.CaptureFixture, write_json: t.Callable[[t.Any], str]) -> None:
    status, payload, _ = run(capsys, "classify", "-i", write_json(W_NODE_JSON))
    assert status == 0
    assert payload["tag"] == "NodalStratum"
    assert payload["root_type"] == "2+1+1"
    assert payload["j"] is None
    assert "claim" in payload


def test_classify_diagonal(capsys: pytest.CaptureFixture, write_json: t.Callable[[t.Any], str]) -> None:
    status, payload, _ = run(capsys, "classify", "-i", write_json(DIAGONAL_JSON))
    assert status == 0
    assert payload["tag"] == "SmoothFiber"
    assert payload["root_type"] == "1+1+1+1"


def test_output_is_deterministic(
    capsys: pytest.CaptureFixture, write_json: t.Callable[[t.Any], str]
) -> None:
    path = write_json(W_NODE_JSON)
    main(["pencil-orbits", "verify-node", "-i", path])
    first = capsys.readouterr().out
    main(["pencil-orbits", "verify-node", "-i", path])
    assert capsys.readouterr().out == first
    payload = json.loads(first)
    assert payload["unique"] is True
    assert payload["geometric_genus"] == 0


def test_nodal_form(capsys: pytest.CaptureFixture, write_json: t.Callable[[t.Any], str]) -> None:
    status, payload, _ = run(capsys, "nodal-form", "-i", write_json(W_NODE_JSON))
    assert status == 0
    assert (payload["a"], payload["b"], payload["path"]) == ("1/1", "2/1", "Exact")


def test_stabilizer(capsys: pytest.CaptureFixture, write_json: t.Callable[[t.Any], str]) -> None:
    status, payload, _ = run(capsys, "stabilizer", "-i", write_json(W_NODE_JSON))
    assert status == 0
    assert (payload["lie_algebra_dim"], payload["orbit_dim"]) == (0, 15)


def test_float_entry_is_rejected_with_its_path(
    capsys: pytest.CaptureFixture, write_json: t.Callable[[t.Any], str]
) -> None:
    document = json.loads(json.dumps(W_NODE_JSON))
    document["Q0"][1][2] = 0.5
    status, payload, err = run(capsys, "classify", "-i", write_json(document))
    assert status == 2
    assert payload is None
    assert "$.Q0[1][2]" in err


def test_precondition_errors_exit_with_2(
    capsys: pytest.CaptureFixture, write_json: t.Callable[[t.Any], str], tmp_path: Path
) -> None:
    assert run(capsys, "diagonalize", "-i", write_json(W_NODE_JSON))[0] == 2
    assert run(capsys, "classify", "-i", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "classify")[0] == 2
    assert run(capsys, "legendre", "--lambda", "1")[0] == 2
    assert run(capsys, "jmap", "--quartic", "1,2,3")[0] == 2
    assert run(capsys)[0] == 2


def test_unknown_option_is_a_usage_error() -> None:
    with pytest.raises(SystemExit) as excinfo:
        main(["pencil-orbits", "classify", "--no-such-option"])
    assert excinfo.value.code == 2


def test_jmap(capsys: pytest.CaptureFixture) -> None:
    status, payload, _ = run(capsys, "jmap", "--quartic", "1,0,0,0,1")
    assert status == 0
    assert payload["j"] == "1728/1"
    assert payload["root_type"] == "1+1+1+1"


def test_legendre_from_roots(capsys: pytest.CaptureFixture) -> None:
    status, payload, _ = run(capsys, "legendre", "--roots", "0,-1,-2,-3")
    assert status == 0
    assert payload["lambda"] == "-3/1"
    assert payload["orbit"] == ["-3/1", "-1/3", "4/1", "1/4", "3/4", "4/3"]


def test_ramification(capsys: pytest.CaptureFixture) -> None:
    status, payload, _ = run(capsys, "ramification")
    assert status == 0
    assert payload["riemann_hurwitz"] == {"total": 10, "expected": 10}


def test_fiber_structure(capsys: pytest.CaptureFixture) -> None:
    status, payload, _ = run(capsys, "fiber-structure", "--value", "1728")
    assert status == 0
    assert payload["multiplicity"] == 2
    assert payload["reduced_class_coeff"] == 6


def test_schubert(capsys: pytest.CaptureFixture) -> None:
    status, payload, _ = run(capsys, "schubert")
    assert status == 0
    assert payload["degree"] == 1
    assert payload["product"] == {"n": 10, "terms": {"8,8": 1}}
    status, payload, _ = run(capsys, "schubert", "--plucker", "--n", "10")
    assert (status, payload["degree"]) == (0, 1430)


def test_slice_verify_campaign(capsys: pytest.CaptureFixture) -> None:
    status, payload, _ = run(capsys, "slice-verify", "--trials", "2", "--values", "5")
    assert status == 0
    assert payload["deviations"] == []
    assert [trial["tangent_count_with_multiplicity"] for trial in payload["trials"]] == [12, 12]
    assert [trial["j_fiber_counts"] for trial in payload["trials"]] == [{"5/1": 12}] * 2


def test_slice_verify_degenerate_input_exits_with_3(
    capsys: pytest.CaptureFixture, write_json: t.Callable[[t.Any], str]
) -> None:
    status, payload, err = run(
        capsys, "slice-verify", "-i", write_json(DEGENERATE_SLICE_JSON), "--values", "5"
    )
    assert status == 3
    assert payload["report"]["tangent_count_with_multiplicity"] == 12
    assert payload["report"]["all_simple"] is False
    assert payload["deviations"]
    assert err.startswith("error: ")


def test_report(capsys: pytest.CaptureFixture) -> None:
    status, payload, _ = run(capsys, "report", "--trials", "1")
    assert status == 0
    assert payload["classes"] == {"F_a": "12σ1", "O_1728": "6σ1", "O_0": "4σ1", "T": "12σ1"}
    assert payload["pairing"] == 1
    assert payload["provenance"]["O_0"]["multiplicity"] == 3


@pytest.mark.parametrize("values", ["", "0,1728"])
def test_report_needs_generic_value(capsys: pytest.CaptureFixture, values: str) -> None:
    status, _, err = run(capsys, "report", "--trials", "1", "--values", values)
    assert status == 2
    assert "1728" in err
