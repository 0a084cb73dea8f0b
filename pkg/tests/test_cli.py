import pytest
from click.testing import CliRunner

from distrank.cli import main

P4 = "p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n"
C4 = "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n"
HOUSE = "p edge 5 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\ne 2 5\n"


def run(*args, input=None):
    return CliRunner().invoke(main, list(args), input=input)


def kv(text):
    return dict(line.split("\t") for line in text.splitlines() if "\t" in line)


@pytest.fixture
def graph_file(tmp_path):
    def make(text, name="g.txt"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return make


@pytest.mark.parametrize("text, rank, nullity, diam", [(P4, 4, 0, 3), (C4, 3, 1, 2), (HOUSE, 4, 1, 2)])
def test_rank(graph_file, text, rank, nullity, diam):
    r = run("--format", "tsv", "rank", graph_file(text))
    assert r.exit_code == 0 and r.stderr == ""
    out = kv(r.stdout)
    assert out["distance_rank"] == str(rank)
    assert out["nullity"] == str(nullity)
    assert out["diameter"] == str(diam)
    assert out["diameter_bound"] == str(diam + 1)


def test_rank_graph6_from_stdin():
    r = run("--format", "tsv", "rank", "-", "--input-format", "graph6", input="Bw\n")
    assert r.exit_code == 0
    assert kv(r.stdout)["distance_rank"] == "3"


def test_rank_disconnected(graph_file):
    r = run("rank", graph_file("p edge 3 1\ne 1 2\n"))
    assert r.exit_code == 1
    assert r.stdout == ""
    assert r.stderr == "error: graph is not connected\n"


def test_rank_parse_error(graph_file):
    r = run("rank", graph_file("p edge 2 1\ne 1 1\n"))
    assert r.exit_code == 1 and r.stderr.startswith("error:") and r.stderr.count("\n") == 1
    r = run("rank", graph_file("p edge 2 1\ne 1 x\n"))
    assert r.exit_code == 1 and "line 2" in r.stderr


def test_missing_file():
    r = run("rank", "/nonexistent/file")
    assert r.exit_code == 1 and r.stderr.startswith("error:")


def test_quotient(graph_file):
    r = run("--format", "tsv", "quotient", graph_file(C4))
    assert r.exit_code == 0
    lines = r.stdout.splitlines()
    assert lines[:2] == ["F 2: 1 3", "F 2: 2 4"]
    assert lines[2:5] == ["2 2", "2 2", "2 2"]
    assert kv(r.stdout) == {"nullity_full": "1", "nullity_quotient": "1"}


def test_census_rank2():
    r = run("--format", "tsv", "census", "--rank", "2", "--max-n", "6", "--dedupe")
    assert r.exit_code == 0
    assert r.stdout == "A_\t2\t1\n#labeled_count\t1\n"


def test_census_rank3_sharded_merge(tmp_path):
    whole = run("--format", "tsv", "census", "--rank", "3", "--max-n", "6")
    paths = []
    for i in range(4):
        r = run("--format", "tsv", "census", "--rank", "3", "--max-n", "6", "--shard", f"{i}/4")
        assert r.exit_code == 0
        p = tmp_path / f"s{i}.tsv"
        p.write_text(r.stdout)
        paths.append(str(p))
    merged = run("--format", "tsv", "merge", "--rank", "3", *paths)
    assert merged.stdout == whole.stdout
    deduped = run("--format", "tsv", "merge", "--rank", "3", "--dedupe", *paths)
    direct = run("--format", "tsv", "census", "--rank", "3", "--max-n", "6", "--dedupe")
    assert deduped.stdout == direct.stdout
    assert [line.split("\t")[0] for line in direct.stdout.splitlines()[:-1]] == ["Bo", "Bw", "C]"]


@pytest.mark.parametrize("args", [
    ["census", "--rank", "3", "--shard", "4/4"],
    ["census", "--rank", "3", "--shard", "x"],
    ["census", "--rank", "1"],
    ["bound", "--k", "1"],
    ["threshold"],
    ["tp"],
    ["nosuchcommand"],
])
def test_usage_errors(args):
    r = run(*args)
    assert r.exit_code == 2
    assert r.stdout == ""


def test_census_cap():
    r = run("census", "--rank", "3", "--max-n", "8")
    assert r.exit_code == 1 and "cap" in r.stderr


def test_threshold():
    r = run("--format", "tsv", "threshold", "4,1,3,2")
    assert r.exit_code == 0
    out = kv(r.stdout)
    assert out["d"] == "2,0,2,0"
    assert out["alpha"] == "2,-1/2,3,0"
    assert out["nullity"] == out["nullity_oracle"] == "1"
    assert kv(run("--format", "tsv", "threshold", "1,1").stdout)["nullity"] == "0"


def test_threshold_errors():
    r = run("threshold", "4,1,3")
    assert r.exit_code == 1 and "even length" in r.stderr


def test_threshold_search():
    r = run("--format", "tsv", "threshold", "--search", "10")
    assert r.exit_code == 0
    rows = [line.split("\t") for line in r.stdout.splitlines()]
    assert rows and all(row[2] == "0" and row[3] == "1" for row in rows)
    assert ["4,1,1,2", "8", "0", "1"] in rows


def test_threshold_matrix():
    r = run("--format", "tsv", "threshold", "2,1", "--matrix")
    assert r.stdout.endswith("2 2\n2 1\n2 0\n")


def test_tp_worked():
    r = run("--format", "tsv", "tp", "6(7(9,8),9(8(6,7),6))")
    assert r.exit_code == 0
    lines = r.stdout.splitlines()
    m1_start = lines.index("9 9", 1)
    assert lines[m1_start + 2] == "4 8 9 8 0 0 0 0 0"
    assert kv(r.stdout)["nullity"] == "0"


def test_tp_family_and_gadgets():
    r = run("--format", "tsv", "tp", "--family", "2", "1", "16")
    assert r.stdout == "2\t1\t16\t2\t2\n"
    r = run("--format", "tsv", "tp", "--family", "3", "2", "25", "--root-sizes", "2,2")
    assert r.stdout == "3\t2\t25\t2,2\t3\n"
    r = run("--format", "tsv", "tp", "--gadgets", "6")
    assert len(r.stdout.splitlines()) == 10
    assert "6\t1\t2" in r.stdout.splitlines()


def test_tp_errors():
    assert run("tp", "3(").exit_code == 1
    assert run("tp", "--family", "1", "1", "10").exit_code == 1
    assert run("tp", "--family", "2", "2", "20", "--root-sizes", "a,b").exit_code == 2


@pytest.mark.parametrize("k, expected", [
    (3, {"R": "6", "R_exact": "yes", "f": "745/4", "floor": "186"}),
    (2, {"R": "2", "R_exact": "yes", "f": "undefined"}),
    (5, {"R": "70", "R_exact": "no (upper bound)"}),
])
def test_bound(k, expected):
    r = run("--format", "tsv", "bound", "--k", str(k))
    out = kv(r.stdout)
    for key, value in expected.items():
        assert out[key] == value


def test_table_format_bound():
    r = run("bound", "--k", "3")
    assert "745/4" in r.stdout and "186" in r.stdout


@pytest.mark.parametrize("args", [
    ["bound", "--k", "4"],
    ["threshold", "--search", "7"],
    ["tp", "6(7(9,8),9(8(6,7),6))"],
    ["census", "--rank", "4", "--max-n", "5", "--dedupe"],
])
def test_deterministic(args):
    a, b = run(*args), run(*args)
    assert a.exit_code == 0 and a.stderr == ""
    assert a.stdout == b.stdout
