"""Command-line interface: subcommands, exit codes, formats."""

import json

import pytest

from qcla import build_variant, resource_report
from qcla.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def gen_file(tmp_path, capsys, name, *flags):
    path = tmp_path / name
    code, _, err = run(capsys, "gen", *flags, "-o", str(path))
    assert code == 0, err
    return path


def test_gen_stats_reference_counts(tmp_path, capsys):
    path = gen_file(tmp_path, capsys, "add10.qc", "--circuit", "add", "--n", "10")
    code, out, _ = run(capsys, "stats", str(path))
    assert code == 0
    assert "toffoli: 34" in out and "cnot: 29" in out and "ancillae: 5" in out


def test_gen_is_byte_deterministic(tmp_path, capsys):
    a = gen_file(tmp_path, capsys, "a.qc", "--circuit", "compare", "--n", "9")
    b = gen_file(tmp_path, capsys, "b.qc", "--circuit", "compare", "--n", "9")
    assert a.read_bytes() == b.read_bytes()


def test_gen_usage_error(capsys):
    code, _, err = run(capsys, "gen", "--circuit", "compare", "--n", "1")
    assert code == 2 and "n >= 2" in err


def test_gen_rejects_bad_flag_combination(capsys):
    code, _, err = run(capsys, "gen", "--circuit", "add", "--n", "4",
                       "--zero-rep", "ones")
    assert code == 2


def test_gen_mersenne_in_place_toffoli_count(tmp_path, capsys):
    path = gen_file(tmp_path, capsys, "m.qc", "--circuit", "add-mersenne",
                    "--zero-rep", "zeros", "--n", "7", "--in-place")
    code, out, _ = run(capsys, "stats", str(path), "--json")
    assert code == 0 and json.loads(out)["toffoli"] == 59


def test_sim_operands(tmp_path, capsys):
    path = gen_file(tmp_path, capsys, "a4.qc", "--circuit", "add", "--n", "4")
    code, out, _ = run(capsys, "sim", str(path), "--a", "5", "--b", "7")
    assert code == 0
    assert out.strip() == "Z=12 restored=true clean=true"


def test_sim_accepts_hex_and_prints_bits(tmp_path, capsys):
    path = gen_file(tmp_path, capsys, "a4.qc", "--circuit", "add", "--n", "4")
    code, out, _ = run(capsys, "sim", str(path), "--a", "0x5", "--b", "0x7",
                       "--bits")
    assert code == 0 and "Z=01100" in out  # 12 over 5 bits, MSB first


def test_sim_operand_out_of_range(tmp_path, capsys):
    path = gen_file(tmp_path, capsys, "a4.qc", "--circuit", "add", "--n", "4")
    code, _, err = run(capsys, "sim", str(path), "--a", "16", "--b", "0")
    assert code == 2 and "out of range" in err


def test_sim_exhaustive(tmp_path, capsys):
    path = gen_file(tmp_path, capsys, "c6.qc", "--circuit", "compare",
                    "--n", "6")
    code, out, _ = run(capsys, "sim", str(path), "--exhaustive")
    assert code == 0 and out.strip() == "pass (4096 inputs)"


def test_stats_missing_file(capsys):
    code, _, err = run(capsys, "stats", "/no/such/file.qc")
    assert code == 3


def test_stats_parse_error_reports_line(tmp_path, capsys):
    bad = tmp_path / "bad.qc"
    bad.write_text("reg A 2 input-a\nbogus A[0]\n")
    code, _, err = run(capsys, "stats", str(bad))
    assert code == 3 and "line 2" in err


def test_round_trip_matches_in_memory_report(tmp_path, capsys):
    for vid, n in [("add-oop", 10), ("add-ip", 16), ("mersenne-ip-ones", 9),
                   ("carry-network", 12)]:
        flags = {
            "add-oop": ["--circuit", "add"],
            "add-ip": ["--circuit", "add", "--in-place"],
            "mersenne-ip-ones": ["--circuit", "add-mersenne", "--in-place",
                                 "--zero-rep", "ones"],
            "carry-network": ["--circuit", "carry-network"],
        }[vid]
        path = gen_file(tmp_path, capsys, f"{vid}.qc", *flags, "--n", str(n))
        code, out, _ = run(capsys, "stats", str(path), "--json")
        assert code == 0
        assert json.loads(out) == resource_report(build_variant(vid, n)).as_dict()


def test_verify_success_and_spot_line(capsys):
    code, out, _ = run(capsys, "verify", "--family", "carry-network",
                       "--range", "10..10")
    assert code == 0
    assert "carry-network n=10 toffoli: expected 24, measured 24 [ok]" in out


def test_verify_family_alias_and_exhaustive_lines(capsys):
    code, out, _ = run(capsys, "verify", "--family", "add", "--range", "7..8")
    assert code == 0
    assert "add-oop n=7 exhaustive: ok" in out


def test_verify_unknown_family(capsys):
    code, _, err = run(capsys, "verify", "--family", "nope", "--range", "7..8")
    assert code == 2 and "unknown family" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["gen", "--circuit", "add"])  # missing --n
    assert exc.value.code == 2


def test_qasm_format_output(tmp_path, capsys):
    path = gen_file(tmp_path, capsys, "a.qasm", "--circuit", "add", "--n", "4",
                    "--format", "qasm")
    assert path.read_text().startswith("OPENQASM 2.0;")
