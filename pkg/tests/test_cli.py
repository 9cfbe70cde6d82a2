import io
import json
import subprocess
import sys

import pytest

from edgeideals import graphs as G
from edgeideals.cli import CHAR_ENV, main
from edgeideals.resolution import BettiTable
from edgeideals.ring import make_ring


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def last_json(text):
    return json.loads(text.strip().splitlines()[-1])


def test_betti_examples():
    code, text = run("betti", "--family", "cycle:3", "--ideal", "parity")
    assert code == 0 and last_json(text)["reg"] == 3
    assert "total:" in text

    code, text = run("betti", "--family", "complete_bipartite:2,3", "--ideal", "parity")
    assert code == 0 and last_json(text)["reg"] == 2

    code, text = run("betti", "--family", "diamond", "--ideal", "binomial", "--format", "json")
    assert code == 0
    table = BettiTable.from_json(text)
    assert table.beta(2, 3) == 4


def test_betti_json_round_trip():
    _, text = run("betti", "--family", "diamond", "--format", "json")
    data = json.loads(text)
    assert set(data) == {"entries", "reg", "pd", "pure"} and data["pure"] is False
    t = BettiTable.from_json(text, 8)
    assert json.loads(t.to_json()) == data


def test_betti_koszul_oracle():
    code, text = run("betti", "--family", "cycle:3", "--oracle", "koszul", "--format", "json")
    assert code == 0
    _, ref = run("betti", "--family", "cycle:3", "--format", "json")
    assert json.loads(text)["entries"] == json.loads(ref)["entries"]

    code, text = run("betti", "--family", "cycle:3", "--oracle", "koszul", "--j-max", "4")
    assert code == 0 and "partial" in text
    data = last_json(text)
    assert data["partial"] and data["j_max"] == 4 and "reg" not in data


def test_graph_sources(tmp_path, monkeypatch):
    path = tmp_path / "c3.txt"
    path.write_text(G.format_edge_list(G.cycle_graph(3)))
    _, a = run("betti", "--edges", str(path), "--format", "json")
    _, b = run("betti", "--graph6", G.to_graph6(G.cycle_graph(3)), "--format", "json")
    monkeypatch.setattr(sys, "stdin", io.StringIO(path.read_text()))
    _, c = run("betti", "--edges", "-", "--format", "json")
    assert a == b == c


def test_ideal_examples():
    code, text = run("ideal", "--family", "cycle:3", "--kind", "parity", "--show", "gens")
    assert code == 0
    assert text.splitlines() == ["x1*x2 - y1*y2", "x1*x3 - y1*y3", "x2*x3 - y2*y3"]

    code, text = run("ideal", "--family", "cycle:5", "--kind", "parity", "--colon-edge", "1,2")
    assert code == 0 and text.strip()

    code, text = run("ideal", "--family", "path:3", "--kind", "binomial", "--phi")
    _, parity = run("ideal", "--family", "path:3", "--kind", "parity")
    assert code == 0 and text == parity


def test_colon_methods_agree():
    outs = []
    for method in ("combinatorial", "groebner", "phi"):
        code, text = run("ideal", "--family", "cycle:5", "--colon-edge", "1,2",
                         "--colon-method", method, "--show", "gb")
        assert code == 0
        outs.append(text)
    assert outs[0] == outs[1] == outs[2]


def test_printed_polynomials_reparse():
    ring = make_ring(4, 32003)
    for flags in (["--show", "gens"], ["--show", "gb"], ["--eta"]):
        code, text = run("ideal", "--family", "diamond", *flags, "--format", "json")
        assert code == 0
        for line in json.loads(text)["polynomials"]:
            assert str(ring.parse(line)) == line


def test_exit_codes(capsys):
    # hypothesis violations
    assert run("ideal", "--family", "cycle:4", "--colon-edge", "1,2")[0] == 3
    assert run("ideal", "--family", "cycle:3", "--phi")[0] == 3
    assert run("ideal", "--family", "cycle:3", "--eta", "--char", "2")[0] == 3
    # bad input
    assert run("betti", "--family", "petersen")[0] == 2
    assert run("betti", "--family", "cycle:3", "--graph6", "Bw")[0] == 2
    assert run("betti", "--family", "cycle:3", "--char", "4")[0] == 2
    assert run("ideal", "--family", "cycle:5", "--colon-edge", "x")[0] == 2
    assert run("verify", "--claims", "nonsense")[0] == 2
    assert "reg_odd_cycle" in capsys.readouterr().err
    with pytest.raises(SystemExit) as info:
        main(["betti", "--ideal", "toric", "--family", "cycle:3"])
    assert info.value.code == 2


def test_verify_examples(tmp_path):
    code, text = run("verify", "--claims", "reg_odd_cycle", "--n-max", "7")
    assert code == 0 and "reg_odd_cycle: 3 pass, 0 fail" in text

    code, text = run("verify", "--claims", "pure_classification", "--n-max", "5")
    assert code == 0 and last_json(text)["summary"]["fail"] == 0

    report = tmp_path / "kk.jsonl"
    code, _ = run("verify", "--claims", "kk_conjecture_probe", "--n-max", "5", "--output", str(report))
    assert code == 0
    lines = report.read_text().splitlines()
    assert json.loads(lines[-1])["summary"]["total"]["probe_counterexamples"] == 0
    assert all(json.loads(line)["claim"] == "kk_conjecture_probe" for line in lines[:-1])


def test_verify_failure_exit_code(monkeypatch):
    from edgeideals import theorems as T

    bogus = T.Claim("bogus", "no graph has an edge", lambda g, cfg: None,
                    lambda g, cfg: (not g.edges, {"edges": len(g.edges)}, {}))
    monkeypatch.setitem(T.CLAIMS, "bogus", bogus)
    code, text = run("verify", "--claims", "bogus", "--n-max", "3")
    assert code == 1 and "failing graph6" in text


def test_verify_sampling_is_seeded():
    args = ("verify", "--claims", "betti_23_zero", "--n-max", "4", "--format", "json", "--sample", "5")

    def picked(text):
        lines = [json.loads(line) for line in text.splitlines()[:-1]]
        return [(d["claim"], d["graph6"], d["verdict"]) for d in lines]

    a = picked(run(*args, "--seed", "7")[1])
    assert a == picked(run(*args, "--seed", "7")[1]) and len(a) == 5


def test_characteristic_env(monkeypatch):
    monkeypatch.setenv(CHAR_ENV, "2")
    # in characteristic 2 the permanental and binomial generators coincide
    code, text = run("ideal", "--family", "path:2", "--kind", "permanental")
    assert code == 0 and text == run("ideal", "--family", "path:2", "--kind", "binomial")[1]
    code, text = run("ideal", "--family", "path:2", "--kind", "lss", "--format", "json")
    assert json.loads(text)["characteristic"] == 2
    monkeypatch.setenv(CHAR_ENV, "abc")
    assert run("betti", "--family", "path:2")[0] == 2


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "edgeideals.cli", "betti", "--family", "path:2",
                           "--format", "json"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["reg"] == 1
