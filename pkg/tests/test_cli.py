import json
import subprocess
import sys

import pytest

from commondeg import cli
from commondeg.graph import from_graph6
from commondeg.generators import mobius_ladder
from commondeg.structure import TheoremVerdict


def run(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def report_without_time(text):
    data = json.loads(text)
    data.pop("wall_time_s")
    return data


def test_analyze_named_mobius_ladder(capsys):
    code, out, _ = run(["analyze", "named:HM", "-j", "1"], capsys)
    assert code == 0
    rec = json.loads(out)["records"][0]
    assert rec["n"] == 8 and rec["e"] == 12
    assert rec["delta2"] == 1 and rec["min_degree"] == 3
    assert rec["odd_girth"] == 5 and rec["triangle_free"] and not rec["bipartite"]
    assert rec["hom_c5"]["map"] is None


def test_analyze_constructive_map(capsys):
    code, out, _ = run(["analyze", "named:G2(7)", "-j", "1"], capsys)
    assert code == 0
    hom = json.loads(out)["records"][0]["hom_c5"]
    assert hom["method"] in ("constructive", "oracle") and hom["map"] is not None


def test_analyze_accepts_edge_list_and_g6_files(tmp_path, capsys):
    el = tmp_path / "c5.txt"
    el.write_text("# five cycle\n5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    code, out, _ = run(["analyze", str(el)], capsys)
    assert code == 0 and json.loads(out)["records"][0]["delta2"] == 1
    g6 = tmp_path / "graphs.g6"
    g6.write_text("D~{\nDhc\n")
    code, out, _ = run(["analyze", "--input", str(g6)], capsys)
    recs = json.loads(out)["records"]
    assert [r["n"] for r in recs] == [5, 5]
    assert recs[0]["triangle_free"] is False


def test_analyze_empty_file_gives_empty_report(tmp_path, capsys):
    f = tmp_path / "empty.g6"
    f.write_text("")
    code, out, _ = run(["analyze", str(f)], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["records"] == [] and data["aggregate"]["graphs_scanned"] == 0


def test_usage_errors_exit_2(tmp_path, capsys):
    assert run(["analyze", "named:G1(12)"], capsys)[0] == 2
    assert run(["analyze", "g6:D~"], capsys)[0] == 2
    assert run(["analyze", str(tmp_path / "missing.g6")], capsys)[0] == 2
    assert run(["verify", "no-such-theorem"], capsys)[0] == 2
    assert run(["generate", "bogus:1"], capsys)[0] == 2
    assert run(["search", "d2 >>> 3"], capsys)[0] == 2


def test_verify_main_i_small(capsys):
    code, out, _ = run(["verify", "main-i", "--n-range", "5..7", "-j", "1"], capsys)
    assert code == 0
    agg = json.loads(out)["aggregate"]
    assert agg["graphs_scanned"] == 14 + 38 + 107
    assert agg["violations"] == 0 and agg["violation_graph6"] == []


def test_verify_main_ii_reports_success_counts(capsys):
    code, out, _ = run(["verify", "main-ii", "--n-range", "8", "-j", "1"], capsys)
    agg = json.loads(out)["aggregate"]
    assert code == 0
    assert agg["constructive_success"] == agg["hypothesis_satisfied"] == agg["oracle_success"]


def test_verify_violation_exits_1(monkeypatch, capsys):
    def always_wrong(g):
        return TheoremVerdict("fake", True, False)

    monkeypatch.setitem(cli.THEOREMS, "main-i", (always_wrong, "trianglefree"))
    code, out, err = run(["verify", "main-i", "--n-range", "3", "-j", "1"], capsys)
    assert code == 1
    assert "THEOREM VIOLATION" in err
    assert json.loads(out)["aggregate"]["violations"] == 3


def test_verify_lem1_random_maximal(capsys):
    code, out, _ = run(["verify", "lem-1", "--corpus", "random:30", "--n-range", "10..20",
                        "--alpha", "1/24", "-j", "1"], capsys)
    assert code == 0
    assert json.loads(out)["arguments"]["alpha"] == "1/24"


def test_search_finds_only_mobius_ladder_at_8(capsys):
    code, out, _ = run(["search", "triangle-free & d2 >= 1 & !homC5", "--n-range", "8", "-j", "1"], capsys)
    assert code == 0
    recs = json.loads(out)["records"]
    assert len(recs) == 1
    from commondeg.canonical import is_isomorphic

    assert is_isomorphic(from_graph6(recs[0]["graph6"]), mobius_ladder())


def test_search_unicode_predicate(capsys):
    code, out, _ = run(["search", "δ₂ > ⌊n/5⌋ ∧ ¬bipartite", "--n-range", "5..8", "-j", "1"], capsys)
    assert code == 0
    assert json.loads(out)["records"] == []


def test_search_budget(capsys):
    code, out, _ = run(["search", "d2 >= 0", "--n-range", "6", "--budget", "5"], capsys)
    agg = json.loads(out)["aggregate"]
    assert agg["graphs_scanned"] == 5 and agg["budget_exhausted"]


def test_generate_blowup_and_enum(capsys):
    code, out, _ = run(["generate", "blowup:C5:[2,2,2,2,2]"], capsys)
    assert code == 0 and out == "I]KoWZBoo\n"
    code, out, _ = run(["generate", "enum:trianglefree:6"], capsys)
    assert len(out.splitlines()) == 38


def test_generate_output_file(tmp_path, capsys):
    dest = tmp_path / "out.g6"
    code, out, _ = run(["generate", "random:maximal:12:5", "--seed", "3", "-o", str(dest)], capsys)
    assert code == 0 and out == ""
    assert len(dest.read_text().splitlines()) == 5


def test_reports_are_deterministic(capsys):
    argv = ["verify", "cor-c3c5", "--corpus", "random:40", "--family", "all", "--n-range", "5..12",
            "--seed", "11", "-j", "1"]
    first = report_without_time(run(argv, capsys)[1])
    second = report_without_time(run(argv, capsys)[1])
    assert first == second
    gen = ["generate", "random:trianglefree:15:0.4:10", "--seed", "5"]
    assert run(gen, capsys)[1] == run(gen, capsys)[1]


def test_report_round_trip(tmp_path, capsys):
    dest = tmp_path / "g.g6"
    run(["generate", "random:maximal:14:6", "--seed", "2", "-o", str(dest)], capsys)
    _, out, _ = run(["analyze", str(dest)], capsys)
    records = json.loads(out)["records"]
    for rec in records:
        again = cli.analyze_graph(from_graph6(rec["graph6"]))
        assert json.loads(json.dumps(again)) == rec


def test_text_format(capsys):
    code, out, _ = run(["analyze", "named:C5", "--format", "text"], capsys)
    assert code == 0 and out.startswith("analyze:")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "commondeg", "generate", "named:K3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "Bw\n"


@pytest.mark.parametrize("text,expected", [
    ("d2 > floor(n/5)", {"D~{": True}),
    ("mindeg >= 2*n/5", {"Dhc": True}),
    ("bipartite", {"Dhc": False}),
])
def test_parse_predicate(text, expected):
    pred = cli.parse_predicate(text)
    for g6, want in expected.items():
        assert pred(from_graph6(g6), {}) is want


def test_parse_range_forms():
    assert cli.parse_range("5") == [5]
    assert cli.parse_range("5..8") == [5, 6, 7, 8]
    assert cli.parse_range("5,10") == [5, 10]
    assert cli.parse_range("5..6,9,6") == [5, 6, 9]
    for bad in ("", "9..5", "a", "5,,6"):
        with pytest.raises(cli.UsageError):
            cli.parse_range(bad)


@pytest.mark.slow
def test_search_c5_blow_ups_at_5_and_10(capsys):
    code, out, _ = run(["search", "triangle-free ∧ δ₂=n/5 ∧ ¬bipartite", "--n-range", "5,10", "-j", "1"], capsys)
    data = json.loads(out)
    # 14 classes at n=5 and 12172 at n=10
    assert data["aggregate"]["graphs_scanned"] == 14 + 12172
    found = [(r["n"], r["blow_up"]["pattern_order"], r["blow_up"]["sizes"]) for r in data["records"]]
    assert found == [(5, 5, [1, 1, 1, 1, 1]), (10, 5, [2, 2, 2, 2, 2])]


def test_search_unsatisfiable(capsys):
    code, out, _ = run(["search", "δ₂ > n", "--n-range", "5..6"], capsys)
    assert code == 0 and json.loads(out)["records"] == []
