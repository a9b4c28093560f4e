import io
import json

import pytest

from kecore.cli import run, shrink
from kecore.fixtures import fixture_text
from kecore.generator import GenSpec, gen_ke
from kecore.graph import Graph, parse_graph
from kecore.matching import maximum_matching


def call(*argv, stdin_text=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdin=io.StringIO(stdin_text), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_core_json_fig4_g1():
    code, out, err = call("core", "fixture:FIG4-G1", "--format", "json")
    assert code == 0 and err == ""
    doc = json.loads(out)
    assert doc["core"] == [4, 5, 6]
    assert doc["mu"] == 3 and doc["alpha"] == 4
    assert doc["is_ke"] is True and doc["algorithm"] == "general"
    assert doc["c"] == [0, 0, 0, 0, 1, 1, 1]
    assert doc["ke"] == [1, 1, 1, 1, 0, None, None]
    assert set(doc) == {"n", "m", "mu", "alpha", "is_ke", "algorithm", "core", "c", "ke"}
    assert out == json.dumps(doc, sort_keys=True) + "\n"


def test_core_not_ke_exit_3():
    code, out, err = call("core", "fixture:FIG1-H3")
    assert code == 3 and out == ""
    assert "NotKE" in err


def test_core_mode_preconditions():
    assert call("core", "fixture:FIG4-G1", "--mode", "bipartite")[0] == 3
    assert call("core", "fixture:FIG4-G1", "--mode", "perfect")[0] == 3


def test_verify_fig111_h2():
    code, out, err = call("verify", "fixture:FIG111-H2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["ok"] and doc["core_oracle"] == [0, 4]
    assert len(doc["theorem"]) == 6 and all(t["passed"] for t in doc["theorem"])


def test_verify_text_format():
    code, out, _ = call("verify", "fixture:FIG1-H3")
    assert code == 0
    assert "ok: True" in out


def test_verify_too_large_exit_4():
    text = "30 0\n"
    code, out, err = call("verify", "-", stdin_text=text)
    assert code == 4 and "TooLarge" in err and out == ""


def test_parse_error_exit_2(tmp_path):
    bad = tmp_path / "bad.el"
    bad.write_text("2 1\n0 0\n")
    code, out, err = call("core", str(bad))
    assert code == 2 and "line 2" in err and "self-loop" in err and out == ""
    assert call("core", str(tmp_path / "missing.el"))[0] == 2
    assert call("core", "fixture:NOPE")[0] == 2


def test_stdin_input():
    code, out, _ = call("is-ke", "-", "--format", "json", stdin_text=fixture_text("FIG1-H1"))
    assert code == 0 and json.loads(out)["is_ke"] is True


def test_other_commands():
    doc = json.loads(call("matching", "fixture:FIG5-G1", "--format", "json")[1])
    assert doc["mu"] == 3 and doc["perfect"] is True and len(doc["edges"]) == 3
    doc = json.loads(call("alpha", "fixture:FIG3-G1", "--format", "json")[1])
    assert doc["alpha"] == 4
    assert call("alpha", "fixture:FIG1-H3")[0] == 3
    doc = json.loads(call("unique-mis", "fixture:FIG3-G2", "--format", "json")[1])
    assert doc["unique"] is True and doc["mis"] == [3, 4, 5]
    doc = json.loads(call("unique-mis", "fixture:FIG4-G1", "--format", "json")[1])
    assert doc["unique"] is False and doc["mis"] is None
    doc = json.loads(call("is-ke", "fixture:FIG1-H3", "--format", "json")[1])
    assert doc["is_ke"] is False and "reason" in doc


def test_gen_roundtrip():
    code, out, _ = call("gen", "--n", "12", "--mu", "4", "--p", "0.4", "--seed", "9")
    assert code == 0
    assert out.startswith("# gen flavor=ke n=12 mu=4")
    assert parse_graph(out) == gen_ke(GenSpec(12, 4, 0.4, 9))
    code, core_out, _ = call("core", "-", "--format", "json", stdin_text=out)
    doc = json.loads(core_out)
    assert code == 0 and doc["mu"] == 4 and doc["alpha"] == 8
    assert call("verify", "-", stdin_text=out)[0] == 0


def test_gen_invalid_spec():
    code, out, err = call("gen", "--n", "3", "--mu", "2")
    assert code == 3 and out == "" and "mu=2" in err


def test_workers_do_not_change_output():
    a = call("core", "fixture:FIG5-G1", "--format", "json", "--workers", "1")
    b = call("core", "fixture:FIG5-G1", "--format", "json", "--workers", "4")
    assert a == b


def test_bad_workers_rejected():
    with pytest.raises(SystemExit):
        call("core", "fixture:FIG5-G1", "--workers", "0")


def test_verify_reports_mismatch(monkeypatch):
    import kecore.cli as cli
    from kecore.matching import Matching

    def lossy(g):
        # drop one matched edge to simulate a broken solver
        m = maximum_matching(g)
        mate = list(m.mate)
        for u, w in enumerate(mate):
            if w != -1:
                mate[u] = mate[w] = -1
                break
        return Matching(tuple(mate))

    monkeypatch.setattr(cli, "maximum_matching", lossy)
    code, out, err = call("verify", "fixture:FIG4-G1", "--format", "json")
    assert code == 5
    doc = json.loads(out)
    assert not doc["ok"]
    assert "mismatch" in err
    small = parse_graph(doc["counterexample"])
    assert small.n == 2 and small.m == 1


def test_shrink_keeps_failure():
    g = gen_ke(GenSpec(10, 3, 0.5, 1))
    small = shrink(g, lambda h: h.m >= 1)
    assert small.m == 1 and small.n == 2
    assert shrink(Graph(0), lambda h: True).n == 0
