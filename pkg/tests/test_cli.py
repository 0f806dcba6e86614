import json

from ncsym.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_golden_convert(capsys):
    code, out, _ = run(capsys, "convert", "p[1,3/2,4]", "--to", "m")
    assert code == 0
    assert out == "m[1,3/2,4] + m[1,2,3,4]\n"


def test_golden_mobius(capsys):
    code, out, _ = run(capsys, "mobius", "1/2/3/4", "1,2,3,4")
    assert code == 0
    assert out == "-6\n"


def test_golden_inner(capsys):
    code, out, _ = run(capsys, "inner", "m[1,3/2,4]", "h[1,3/2,4]")
    assert code == 0
    assert out == "24\n"


def test_exit_code_usage(capsys):
    code, _, err = run(capsys, "convert", "m[1]")  # --to missing
    assert code == 1
    assert "usage error" in err
    code, _, _ = run(capsys, "not-a-command")
    assert code == 1


def test_exit_code_parse_error(capsys):
    code, _, err = run(capsys, "convert", "z[1]", "--to", "m")
    assert code == 2
    assert "parse error" in err


def test_exit_code_semantic_error(capsys):
    code, _, err = run(capsys, "mobius", "1,2", "1,2,3")
    assert code == 3
    assert "ground set" in err


def test_strict_rationals_flag(capsys):
    code, out, _ = run(
        capsys, "inner", "m[1,3/2,4]", "h[1,3/2,4]", "--strict-rationals"
    )
    assert code == 0
    assert out == "24/1\n"


def test_omega_project_lift(capsys):
    code, out, _ = run(capsys, "omega", "e[1,3/2,4]")
    assert code == 0 and out == "h[1,3/2,4]\n"
    code, out, _ = run(capsys, "project", "m[1,3/2,4]")
    assert code == 0 and out == "2*m[2,2]\n"
    code, out, _ = run(capsys, "lift", "m[2,2]")
    assert code == 0
    assert out == "1/6*m[1,2/3,4] + 1/6*m[1,3/2,4] + 1/6*m[1,4/2,3]\n"


def test_lattice_table(capsys):
    code, out, _ = run(capsys, "lattice", "--n", "2", "--table", "join")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0].split("\t") == ["*", "1,2", "1/2"]
    assert lines[1].split("\t") == ["1,2", "1,2", "1,2"]
    assert lines[2].split("\t") == ["1/2", "1,2", "1/2"]
    code, out, _ = run(capsys, "lattice", "--n", "3", "--table", "mobius", "--format", "json")
    payload = json.loads(out)
    assert payload["n"] == 3 and len(payload["rows"]) == 5


def test_schur_and_jacobi_trudi(capsys):
    code, out, _ = run(capsys, "schur", "(2)")
    assert code == 0 and out == "m[1/2] + 2*m[1,2]\n"
    code, out_schur, _ = run(capsys, "schur", "(2,1)", "--vec", "[2,1]")
    assert code == 0
    code, out_jt, _ = run(capsys, "jacobi-trudi", "(2,1)", "--vec", "[2,1]", "--variant", "h")
    assert code == 0
    assert out_schur == out_jt


def test_expand_output(capsys):
    code, out, _ = run(capsys, "expand", "m[1,3/2,4]", "--vars", "2")
    assert code == 0
    assert out == "1 x1 x2 x1 x2\n1 x2 x1 x2 x1\n"
    code, out, _ = run(capsys, "expand", "p[1,3/2,4]", "--vars", "1", "--format", "json")
    payload = json.loads(out)
    assert payload == {
        "variables": 1,
        "terms": [{"word": [1, 1, 1, 1], "coeff": "1"}],
    }


def test_json_output_for_convert(capsys):
    code, out, _ = run(
        capsys, "convert", "p[1,3/2,4]", "--to", "m", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["basis"] == "m"
    assert payload["terms"] == [
        {"blocks": [[1, 3], [2, 4]], "coeff": "1"},
        {"blocks": [[1, 2, 3, 4]], "coeff": "1"},
    ]


def test_rsk_files(tmp_path, capsys):
    biword_file = tmp_path / "biword.txt"
    biword_file.write_text("1' 2' 2'' 2' 3'' 4'\n2' 1'' 3'' 3' 2'' 1'\n")
    code, out, _ = run(capsys, "rsk", str(biword_file))
    assert code == 0
    assert out == "1'' 1' 3'\n2' 2''\n3''\n\n1' 2'' 2'\n2' 3''\n4'\n"

    tableau_file = tmp_path / "pair.txt"
    tableau_file.write_text("1'' 1' 3'\n2' 2''\n3''\n\n1' 2'' 2'\n2' 3''\n4'\n")
    code, out, _ = run(capsys, "rsk", "--inverse", str(tableau_file))
    assert code == 0
    assert out == "1' 2' 2'' 2' 3'' 4'\n2' 1'' 3'' 3' 2'' 1'\n"

    code, _, err = run(capsys, "rsk", str(tmp_path / "missing.txt"))
    assert code == 3


def test_verify_subcommand_small(capsys):
    code, out, _ = run(capsys, "verify", "mobius", "--max-n", "2")
    assert code == 0
    assert "PASS" in out and "FAIL" not in out
    code, _, err = run(capsys, "verify", "no-such-suite")
    assert code == 3
