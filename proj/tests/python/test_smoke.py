import json
import os
import subprocess
import sys

import pytest

import webdimer as wd


def test_top_cell_and_positroid():
    net = wd.top_cell_network(2, 4)
    assert wd.excedance(net) == 2
    assert wd.validate_network(net) == []
    assert len(wd.positroid(net)) == 6
    assert wd.check_plucker_relations(net)


def test_round_trip_is_identity():
    net = wd.top_cell_network(3, 6)
    assert wd.serialize_roundtrip(net) == net


def test_boundary_measurement_and_plucker():
    net = wd.top_cell_network(1, 3)
    values = wd.plucker(net)
    assert set(values) == {"1", "2", "3"}
    assert wd.boundary_measurement(net, [1]) == values["1"]


def test_web_measurement_shape():
    net = wd.top_cell_network(2, 4)
    inv = json.loads(wd.web_measurement(net, 2, [1, 1, 1, 1]))
    assert inv["r"] == 2
    assert inv["lambda"] == [1, 1, 1, 1]
    assert inv["values"]  # nonzero entries present


def test_factorization_report():
    net = wd.top_cell_network(2, 4)
    checks = wd.verify_factorization(net, 2, [1, 1, 1, 1])
    assert checks and all(ok for _, ok, _ in checks)


def test_dimension_pins():
    assert wd.dim_invariant_space(3, [1] * 9) == 42
    assert wd.dim_invariant_space(2, [1] * 6) == 5
    assert wd.positroid_dim(wd.top_cell_network(3, 6), 2, [1] * 6) == 5


def test_square_move_identity():
    assert wd.square_move_identity(3, 1, 1, 1, 1)


def test_duality():
    assert wd.duality_signed_permutation()


def test_pinned_examples():
    checks = wd.pinned_example_suite()
    assert checks and all(ok for _, ok, _ in checks)


@pytest.mark.skipif("WEBDIMER_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_reports_are_byte_identical(tmp_path):
    cli = os.environ["WEBDIMER_CLI"]
    net = tmp_path / "net.json"
    net.write_text(wd.top_cell_network(2, 4))
    outs = []
    for i in range(2):
        out = tmp_path / f"rep{i}.json"
        res = subprocess.run(
            [cli, "verify", "factorization", "--network", str(net), "-r", "2",
             "--lambda", "1,1,1,1", "--seed", "7", "--out", str(out)],
            capture_output=True, text=True)
        assert res.returncode == 0, res.stderr
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


@pytest.mark.skipif("WEBDIMER_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_exit_codes(tmp_path):
    cli = os.environ["WEBDIMER_CLI"]
    assert subprocess.run([cli, "--nonsense"], capture_output=True).returncode == 2
    net = tmp_path / "bad.json"
    net.write_text("{not json")
    res = subprocess.run([cli, "plucker", "--network", str(net)], capture_output=True)
    assert res.returncode == 2
