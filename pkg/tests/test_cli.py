import json

import pytest

from qadd import parse_netlist
from qadd.cli import dispatch


def run_cli(capsys, *argv):
    code = dispatch(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_synth_to_file_then_stats(tmp_path, capsys):
    path = tmp_path / "add5.qn"
    code, out, _ = run_cli(capsys, "synth", "--kind", "ripple", "--n", "5", "-o", str(path))
    assert code == 0 and out == ""
    circuit = parse_netlist(path.read_text())
    assert circuit.wire_count == 11

    code, out, _ = run_cli(capsys, "stats", str(path), "--json")
    assert code == 0
    stats = json.loads(out)
    assert stats["depth"] == 22 and stats["size"] == 29


def test_synth_to_stdout(capsys):
    code, out, _ = run_cli(capsys, "synth", "--kind", "fanout-tree", "--t", "8", "--f", "2")
    assert code == 0
    assert out.startswith("qadd 1\n")
    assert parse_netlist(out).wire_count == 9


def test_stats_asserts_ripple_closed_forms(capsys):
    code, out, _ = run_cli(capsys, "stats", "--kind", "ripple", "--n", "5")
    assert code == 0
    assert "depth 22" in out and "size 29" in out


def test_verify_exhaustive_combined(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--kind", "combined", "--n", "8", "--d", "2", "--exhaustive"
    )
    assert code == 0
    assert "failures 0" in out and "131072" in out


def test_verify_random_json(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--kind", "ripple", "--n", "32", "--trials", "50",
        "--seed", "42", "--json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["total_cases"] == 50 and payload["seed"] == 42
    assert payload["failures"] == [] and payload["ancilla_violations"] == []


def test_verify_defaults_to_exhaustive_when_small(capsys):
    code, out, _ = run_cli(capsys, "verify", "--kind", "ripple", "--n", "4")
    assert code == 0 and "[exhaustive]" in out and "cases 512" in out


def test_verify_failure_exits_one(capsys, monkeypatch):
    import qadd.cli as cli

    def wrong_oracle(circuit):
        def packed(cols, n_cases):
            out = list(cols)
            out[0] ^= (1 << n_cases) - 1  # flip one output wire everywhere
            return out

        return None, packed

    monkeypatch.setattr(cli, "adder_oracle", wrong_oracle)
    code, out, _ = run_cli(capsys, "verify", "--kind", "ripple", "--n", "3")
    assert code == 1
    assert "failures 0" not in out


@pytest.mark.parametrize(
    "argv",
    [
        ("synth", "--kind", "ripple"),  # missing --n
        ("synth", "--kind", "ripple", "--n", "5", "--d", "2"),  # stray flag
        ("synth", "--kind", "combined", "--n", "16"),  # missing --d
        ("synth", "--kind", "fanout-tree", "--t", "4"),  # missing --f
        ("synth", "--n", "4"),  # missing --kind
        ("estimate", "--target", "shor-dlog"),  # missing --n
        ("estimate", "--target", "adder-fanout", "--n", "64", "--e", "5"),  # missing --f
        ("estimate", "--target", "adder-fanout", "--n", "64", "--e", "5", "--f", "4", "--adder", "ripple"),
        ("verify", "--kind", "combined", "--n", "12", "--d", "2"),  # invalid n
        ("nonsense",),
        ("synth", "--kind", "ripple", "--n", "x"),
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    code, _, err = run_cli(capsys, *argv)
    assert code == 2
    assert err


def test_stats_rejects_both_file_and_kind(tmp_path, capsys):
    path = tmp_path / "c.qn"
    run_cli(capsys, "synth", "--kind", "ripple", "--n", "3", "-o", str(path))
    code, _, err = run_cli(capsys, "stats", str(path), "--kind", "ripple", "--n", "3")
    assert code == 2 and "not both" in err


def test_estimate_shor_ripple(capsys):
    code, out, _ = run_cli(
        capsys, "estimate", "--target", "shor-dlog", "--n", "256", "--adder", "ripple", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["qubits_total"] == 1024
    assert payload["formula_id"] == "shor-dlog+ripple"


def test_estimate_adder_fanout(capsys):
    code, out, _ = run_cli(
        capsys, "estimate", "--target", "adder-fanout", "--n", "65536", "--e", "4",
        "--f", "16", "--json",
    )
    assert code == 0
    assert json.loads(out)["ancilla"] == 49152


def test_byte_identical_reruns(capsys):
    argv = ("verify", "--kind", "combined", "--n", "16", "--d", "4", "--seed", "42", "--json")
    _, first, _ = run_cli(capsys, *argv)
    _, second, _ = run_cli(capsys, *argv)
    assert first == second
    argv = ("estimate", "--target", "shor-dlog", "--n", "64", "--adder", "combined", "--d", "6", "--json")
    _, first, _ = run_cli(capsys, *argv)
    _, second, _ = run_cli(capsys, *argv)
    assert first == second
