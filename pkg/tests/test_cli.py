import json

import pytest

from toruschar.cli import run
from toruschar.generators import decompose
from toruschar.groups import GroupSpec
from toruschar.laurent import LaurentPoly, exponents
from toruschar.weyl import orbit_sum


def test_killing_single(capsys):
    assert run(["killing", "--family", "sl", "--rank", "2"]) == 0
    assert capsys.readouterr().out.strip() == "4"


def test_killing_table(capsys):
    assert run(["killing"]) == 0
    out = capsys.readouterr().out
    assert "SL(4)" in out and "ratio 8" in out


def test_bracket_output(capsys):
    assert run(["bracket", "--family", "sp", "--rank", "1", "--a", "1,0", "--b", "0,1", "--c", "1"]) == 0
    out = capsys.readouterr().out
    assert "(1/2)*tau(1,1)" in out and "(-1/2)*tau(1,-1)" in out


def test_bracket_gl_needs_flag(capsys):
    assert run(["bracket", "--family", "gl", "--rank", "2", "--a", "1,0", "--b", "0,1"]) == 2
    err = capsys.readouterr().err
    assert "extrapolat" in err


def test_invalid_flags_exit_2():
    with pytest.raises(SystemExit) as exc:
        run(["bracket", "--family", "nope", "--rank", "1", "--a", "1,0", "--b", "0,1"])
    assert exc.value.code == 2


def test_decompose_expand_file_round_trip(tmp_path, capsys):
    g = GroupSpec("Sp", 2, 2)
    f = orbit_sum(exponents([[1, 0], [0, 1]]), g) + orbit_sum(
        exponents([[2, 0], [0, 0]]), g
    )
    src = tmp_path / "poly.json"
    gen = tmp_path / "gen.json"
    back = tmp_path / "back.json"
    src.write_text(json.dumps(f.to_json()))
    assert run(["decompose", "--in", str(src), "--out", str(gen)]) == 0
    assert (
        run(
            [
                "expand",
                "--family",
                "sp",
                "--rank",
                "2",
                "--factors",
                "2",
                "--in",
                str(gen),
                "--out",
                str(back),
            ]
        )
        == 0
    )
    assert LaurentPoly.from_json(json.loads(back.read_text())) == f


def test_decompose_non_invariant_exit_2(tmp_path, capsys):
    g = GroupSpec("GL", 2, 1)
    f = LaurentPoly.variable(g, 1, 1)
    src = tmp_path / "bad.json"
    src.write_text(json.dumps(f.to_json()))
    assert run(["decompose", "--in", str(src)]) == 2
    err = capsys.readouterr().err
    assert "not W-invariant" in err and "perm" in err


def test_orbit_sum_and_level(tmp_path, capsys):
    assert (
        run(
            [
                "orbit-sum",
                "--family",
                "gl",
                "--rank",
                "2",
                "--factors",
                "1",
                "--exps",
                "[[1],[0]]",
            ]
        )
        == 0
    )
    obj = json.loads(capsys.readouterr().out)
    assert len(obj["terms"]) == 2

    assert (
        run(
            [
                "level",
                "--family",
                "sl",
                "--rank",
                "2",
                "--factors",
                "1",
                "--exps",
                "[[1],[1]]",
            ]
        )
        == 0
    )
    assert capsys.readouterr().out.strip() == "0"


def test_level_cli_half_integer_exponents(capsys):
    assert (
        run(
            [
                "level",
                "--family",
                "so-even",
                "--rank",
                "2",
                "--factors",
                "1",
                "--exps",
                "[[0.5],[0.5]]",
            ]
        )
        == 0
    )
    assert capsys.readouterr().out.strip() == "2"


def test_cohomology_cli(capsys):
    assert (
        run(
            [
                "cohomology",
                "--family",
                "sl",
                "--rank",
                "2",
                "--factors",
                "2",
                "--seed",
                "5",
            ]
        )
        == 0
    )
    assert capsys.readouterr().out.strip() == "Z1 = 4, B1 = 2, H1 = 2"


def test_structure_constants_byte_identical(tmp_path):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    for out in (out1, out2):
        assert (
            run(
                [
                    "structure-constants",
                    "--family",
                    "sp",
                    "--rank",
                    "1",
                    "--c",
                    "1",
                    "--cutoff",
                    "2",
                    "--out",
                    str(out),
                ]
            )
            == 0
        )
    assert out1.read_bytes() == out2.read_bytes()
    table = json.loads(out1.read_text())
    assert table["cutoff"] == 2


def test_verify_bracket_small(capsys):
    code = run(
        [
            "verify-bracket",
            "--family",
            "sp",
            "--rank",
            "1",
            "--trials",
            "3",
            "--seed",
            "0",
        ]
    )
    assert code == 0
    assert "max relative error" in capsys.readouterr().out


def test_verify_jacobi_small(capsys):
    code = run(
        [
            "verify-jacobi",
            "--family",
            "sl",
            "--rank",
            "2",
            "--trials",
            "5",
        ]
    )
    assert code == 0
    assert "identical" in capsys.readouterr().out


def test_missing_file_exit_2(capsys):
    assert run(["decompose", "--in", "/nonexistent/x.json"]) == 2
