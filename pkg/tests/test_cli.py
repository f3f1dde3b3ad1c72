import io

import pytest

from conftest import FIG2_EDGES
from mimkit.cli import main
from mimkit.fileio import read_bdecomp, read_graph, read_records, write_edgelist
from mimkit.graph import Graph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def fig2(tmp_path):
    p = tmp_path / "fig2.txt"
    p.write_text(write_edgelist(Graph(6, FIG2_EDGES)))
    return str(p)


def test_classify_line(capsys):
    code, out, _ = run(capsys, "classify", "2P2", "C4")
    assert code == 0
    assert out.split()[:2] == ["unbounded", "6.2(vii)"]


def test_classify_records(capsys):
    code, out, _ = run(capsys, "classify", "P4", "K5", "--format", "records")
    rec = dict(read_records(out))
    assert code == 0 and rec["verdict"] == "bounded" and rec["case"] == "6.1(i)"


def test_classify_kr_and_rp1(capsys):
    assert run(capsys, "classify", "--kr", "5", "P2+P3")[1].startswith("open OP3")
    assert run(capsys, "classify", "--rp1", "5", "bowtie")[1].startswith("open OP4")


def test_mimw_on_worked_example(capsys, fig2, tmp_path):
    dec = tmp_path / "d.txt"
    code, out, _ = run(capsys, "mimw", fig2, "--decomposition", str(dec))
    assert code == 0 and out.strip() == "1"
    read_bdecomp(dec.read_text(), Graph(6, FIG2_EDGES))


def test_cutmim(capsys, fig2):
    assert run(capsys, "cutmim", fig2, "3,4")[1].strip() == "2"
    assert run(capsys, "cutmim", "C4", "0,1")[1].strip() == "2"


def test_gen_wall_vertex_count(capsys):
    code, out, _ = run(capsys, "gen", "wall", "4", "4")
    assert code == 0 and read_graph(out).n == 30


def test_gen_formats_and_meta(capsys, tmp_path):
    meta = tmp_path / "m.txt"
    code, out, _ = run(capsys, "gen", "padded-net-wall", "3", "3", "--coloring", "4", "--format", "graph6", "--meta", str(meta))
    assert code == 0
    G = read_graph(out)
    assert "coloring" in meta.read_text() and G.n > 0


def test_gen_gadgets_and_witness(capsys):
    assert read_graph(run(capsys, "gen", "gprime", "P3")[1]).n == 2 * 3 + 4 * 2
    assert read_graph(run(capsys, "gen", "witness", "split_i", "2")[1]).n == 12


def test_transform_reports_effect(capsys):
    code, out, err = run(capsys, "transform", "subdivide-all:1; make-clique:A", "C4")
    G = read_graph(out)
    assert code == 0 and (G.n, G.m) == (8, 14)
    assert err.startswith("effect lower - upper +5")


def test_decompose_writes_bdecomp_then_certificate(capsys):
    code, out, _ = run(capsys, "decompose", "--class", "2p1p2-bowtie", "KmK(5)")
    assert code == 0
    body, cert = out.rstrip("\n").rsplit("\n", 1)
    assert cert == "width 2 bound 2"
    read_bdecomp(body + "\n")


def test_decompose_multijoin(capsys):
    code, out, _ = run(capsys, "decompose", "--class", "multijoin", "--parts", "0,1;2,3", "C4")
    assert code == 0 and out.rstrip().endswith("width 2 bound 3")


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "4")
    assert code == 0 and len(out.splitlines()) == 11


def test_lab_list_and_run(capsys, tmp_path):
    code, out, _ = run(capsys, "lab", "list")
    assert code == 0 and "lemma31:" in out
    code, out, _ = run(capsys, "lab", "lemma31", "--trials", "3", "--max-n", "6", "--out", str(tmp_path))
    assert code == 0 and out.startswith("lemma31: ok")
    assert (tmp_path / "index.txt").exists()


def test_lab_budget_exit_code(capsys):
    code, out, _ = run(capsys, "lab", "lemma31", "--trials", "30", "--budget", "0")
    assert code == 6 and "incomplete" in out


@pytest.mark.parametrize(
    "argv, code",
    [
        (["mimw", "K200"], 4),
        (["mimw", "P4+"], 3),
        (["decompose", "--class", "2p2-k13", "K1,3"], 5),
        (["decompose", "--class", "multijoin", "--parts", "0,1;1,2,3", "C4"], 5),
        (["gen", "witness", "cb_p8", "9"], 4),
        (["gen", "wall", "1", "4"], 2),
        (["classify", "P4", "Graph0"], 3),
        (["lab", "nonexistent"], 2),
        (["cutmim", "P4", "a,b"], 3),
    ],
)
def test_exit_codes(capsys, argv, code):
    got, _, err = run(capsys, *argv)
    assert got == code
    assert err.startswith("mimkit: error:") and len(err.strip().splitlines()) == 1


def test_usage_errors_exit_two(capsys):
    for argv in (["gen", "frob"], ["gen", "wall", "4"], ["classify", "P4"], ["bogus"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2
    capsys.readouterr()


def test_stdin_input(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(write_edgelist(Graph(3, [(0, 1), (1, 2)]))))
    assert run(capsys, "mimw", "-")[1].strip() == "1"


def test_help_documents_exit_codes(capsys):
    with pytest.raises(SystemExit):
        main(["--help"])
    out = capsys.readouterr().out
    for code in range(7):
        assert f"  {code}  " in out
