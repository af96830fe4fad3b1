import json

from pairrank.cli import main
from pairrank.serialize import parse_problem_json


def write_instance(tmp_path, capsys, instance_id):
    assert main(["example", "--id", instance_id, "--emit"]) == 0
    text = capsys.readouterr().out
    path = tmp_path / f"ex{instance_id.replace('.', '')}.json"
    path.write_text(text, encoding="utf-8")
    return path


def test_example_emit_parses(tmp_path, capsys):
    path = write_instance(tmp_path, capsys, "3.3")
    labeled = parse_problem_json(path.read_text())
    assert labeled.labels == ("X1", "X2", "X3", "X4")
    assert "3.3-prime" in labeled.note  # orientation note ships with the document


def test_example_unknown_id(capsys):
    assert main(["example", "--id", "9.9"]) == 1
    assert "unknown instance" in capsys.readouterr().err


def test_rank_least_squares(tmp_path, capsys):
    path = write_instance(tmp_path, capsys, "3.3")
    assert main(["rank", "--method", "ls", "--input", str(path)]) == 0
    out = capsys.readouterr().out
    assert "X1: 1/8" in out
    assert "X3: -3/8" in out
    assert "ranking: X4 > X1 > X2 > X3" in out


def test_rank_json_output(tmp_path, capsys):
    path = write_instance(tmp_path, capsys, "3.3")
    assert main(["rank", "--method", "grs", "--epsilon", "1", "--input", str(path), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["ratings"]["X4"] == "4/3"
    assert payload["ranking"] == [["X4"], ["X1"], ["X2"], ["X3"]]


def test_rank_grs_requires_epsilon(tmp_path, capsys):
    path = write_instance(tmp_path, capsys, "3.3")
    assert main(["rank", "--method", "grs", "--input", str(path)]) == 1
    assert main(["rank", "--method", "grs", "--epsilon", "fish", "--input", str(path)]) == 1
    assert main(["rank", "--method", "grs", "--epsilon", "-2", "--input", str(path)]) == 1


def test_classify_output(tmp_path, capsys):
    path = write_instance(tmp_path, capsys, "3.3")
    assert main(["classify", "--input", str(path)]) == 0
    out = capsys.readouterr().out
    assert "balanced: yes" in out
    assert "round_robin: no" in out
    assert "unweighted: yes" in out
    assert "extremal: yes" in out
    assert "components: {X1, X2, X3, X4}" in out


def test_check_exit_codes(tmp_path, capsys):
    path = write_instance(tmp_path, capsys, "3.3")
    assert main(["check", "--axiom", "sc", "--method", "rowsum", "--input", str(path)]) == 2
    capsys.readouterr()
    assert main(["check", "--axiom", "iim", "--method", "rowsum", "--input", str(path)]) == 0
    capsys.readouterr()
    assert main(["check", "--axiom", "iim", "--method", "ls", "--input", str(path)]) == 2
    out = capsys.readouterr().out
    assert "witness: change at (X3, X4)" in out
    assert "witness target: (X1, X2)" in out
    assert main(["check", "--axiom", "wsc", "--method", "rowsum", "--input", str(path)]) == 0


def test_check_budget_exceeded_exit(tmp_path, capsys):
    path = write_instance(tmp_path, capsys, "3.3")
    code = main(
        ["check", "--axiom", "sc", "--method", "rowsum", "--input", str(path), "--budget", "0"]
    )
    assert code == 3
    assert "budget-exceeded" in capsys.readouterr().out


def test_check_json_report(tmp_path, capsys):
    path = write_instance(tmp_path, capsys, "3.3")
    code = main(
        ["check", "--axiom", "sc", "--method", "ls", "--input", str(path), "--json"]
    )
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["verdict"] == "satisfied-on-instances-checked"
    assert payload["axiom"] == "sc"


def test_check_mv_axioms(tmp_path, capsys):
    path = write_instance(tmp_path, capsys, "4.1")
    assert main(["check", "--axiom", "mva", "--method", "ls", "--input", str(path)]) == 0
    capsys.readouterr()
    assert main(["check", "--axiom", "mvi", "--method", "rowsum", "--input", str(path)]) == 0


def test_macrovertices_listing(tmp_path, capsys):
    path = write_instance(tmp_path, capsys, "4.1")
    assert main(["macrovertices", "--input", str(path)]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert out == ["{X2, X3}", "{X1, X2, X3}", "{X1, X2, X3, X4}"]


def test_enumerate_sc(tmp_path, capsys):
    path = write_instance(tmp_path, capsys, "3.1")
    assert main(["enumerate-sc", "--input", str(path)]) == 0
    out = capsys.readouterr().out
    assert "X1 > (X2 ~ X3) > X4" in out
    assert "total: 1" in out


def test_theorem31_command(capsys):
    assert main(["theorem31"]) == 0
    out = capsys.readouterr().out
    assert "verdict: contradiction established" in out
    assert out.count("[ok]") == 5
    assert main(["theorem31", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["verdict"] == "contradiction established"


def test_ingest_and_rank_csv(tmp_path, capsys):
    csv_path = tmp_path / "matches.csv"
    csv_path.write_text(
        "object_a,object_b,score_a,score_b\n"
        "ann,bob,1,0\n"
        "bob,cam,1/2,1/2\n"
        "cam,ann,0,1\n",
        encoding="utf-8",
    )
    assert main(["ingest", "--input", str(csv_path)]) == 0
    document = capsys.readouterr().out
    labeled = parse_problem_json(document)
    assert labeled.labels == ("ann", "bob", "cam")

    out_path = tmp_path / "problem.json"
    assert main(["ingest", "--input", str(csv_path), "--output", str(out_path)]) == 0
    capsys.readouterr()
    assert main(["rank", "--method", "rowsum", "--input", str(out_path)]) == 0
    out = capsys.readouterr().out
    assert "ann: 2" in out


def test_rank_reads_csv_directly(tmp_path, capsys):
    csv_path = tmp_path / "m.csv"
    csv_path.write_text(
        "object_a,object_b,score_a,score_b\na,b,1,0\n", encoding="utf-8"
    )
    assert main(["rank", "--method", "rowsum", "--input", str(csv_path)]) == 0
    assert "a: 1" in capsys.readouterr().out


def test_parse_errors_exit_1(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{", encoding="utf-8")
    assert main(["rank", "--method", "ls", "--input", str(bad)]) == 1
    capsys.readouterr()
    assert main(["rank", "--method", "ls", "--input", str(tmp_path / "missing.json")]) == 1
    capsys.readouterr()
    bad_csv = tmp_path / "bad.csv"
    bad_csv.write_text("object_a,object_b,score_a,score_b\nA,A,1,0\n", encoding="utf-8")
    assert main(["rank", "--method", "ls", "--input", str(bad_csv)]) == 1
    err = capsys.readouterr().err
    assert "line 2" in err


def test_usage_errors_exit_1(capsys):
    assert main(["rank", "--method", "mystery", "--input", "x.json"]) == 1
    capsys.readouterr()
    assert main(["frobnicate"]) == 1


def test_stdin_input(tmp_path, capsys, monkeypatch):
    import io

    path = write_instance(tmp_path, capsys, "3.1")
    monkeypatch.setattr("sys.stdin", io.StringIO(path.read_text()))
    assert main(["enumerate-sc", "--input", "-"]) == 0
    out = capsys.readouterr().out
    assert "X1 > (X2 ~ X3) > X4" in out
