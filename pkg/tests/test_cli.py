import io
import json
from contextlib import redirect_stderr, redirect_stdout

import pytest

from z3conn.cli import main
from z3conn.graph import format_edgelist, parse_edgelist
from z3conn.verifier import is_z3_connected


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


def test_classify_covered():
    code, out, _ = run_cli("classify", "(6,5,4^4,3)")
    assert code == 0
    data = json.loads(out)
    assert data["sequence"] == "(6,5,4^4,3)"
    assert data["graphic"] is True
    assert data["tag"] == "covered"
    assert data["route"] == "T12"


def test_classify_negative_cases():
    code, out, _ = run_cli("classify", "(4,3^6)")
    assert code == 1
    assert json.loads(out)["tag"] == "exception_n3"
    code, out, _ = run_cli("classify", "(5,4,3^4)")
    assert code == 1
    data = json.loads(out)
    assert data["graphic"] is False
    code, out, _ = run_cli("classify", "(7,3^7)")
    assert code == 1
    assert json.loads(out)["k"] == 7


def test_classify_syntax_error():
    code, _, err = run_cli("classify", "(3^^4)")
    assert code == 2
    assert "error:" in err


def test_realize_edgelist_roundtrips_through_verify(tmp_path):
    code, out, _ = run_cli("realize", "(4^2,3^4)")
    assert code == 0
    assert out.startswith("# realization of (4^2,3^4)")
    assert "# proof: certificate" in out
    G = parse_edgelist(out)
    assert G.degree_sequence().degrees == (4, 4, 3, 3, 3, 3)
    path = tmp_path / "g.txt"
    path.write_text(out)
    code, out, _ = run_cli("verify", str(path))
    assert code == 0
    assert "z3_connected=true" in out


def test_realize_json_and_dot():
    code, out, _ = run_cli("realize", "(5,3^5)", "--format", "json")
    assert code == 1 or code == 0
    code, out, _ = run_cli("realize", "(4^2,3^4)", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["n"] == 6
    assert len(data["edges"]) == 10
    code, out, _ = run_cli("realize", "(4^2,3^4)", "--format", "dot")
    assert code == 0
    assert "graph G {" in out


def test_realize_prints_certificate_on_request():
    code, out, _ = run_cli("realize", "(6,4,3^6)", "--certify")
    assert code == 0
    assert "# certificate:" in out
    cert_text = out.split("# certificate:\n", 1)[1]
    from z3conn.reducer import parse_certificate, replay
    cert = parse_certificate(cert_text)
    G = parse_edgelist(out.split("# certificate:", 1)[0])
    assert replay(G, cert).ok


def test_realize_negative_and_unsupported():
    code, out, _ = run_cli("realize", "(4,3^6)")
    assert code == 1
    assert "# exception" in out
    code, out, _ = run_cli("realize", "(5,4,3^4)")
    assert code == 1
    assert "# not_graphic" in out
    code, out, err = run_cli("realize", "(4,4,3^12)")
    assert code == 2
    assert "unsupported" in err


def test_verify_negative_graph(tmp_path):
    from z3conn.graph import complete_graph
    path = tmp_path / "k4.txt"
    path.write_text(format_edgelist(complete_graph(4)))
    code, out, _ = run_cli("verify", str(path))
    assert code == 1
    assert "z3_connected=false" in out
    assert "three_flowable=false" in out


def test_verify_missing_file():
    code, _, err = run_cli("verify", "/nonexistent/file.txt")
    assert code == 2
    assert "error:" in err


def test_certify_command(tmp_path):
    from z3conn.catalog import wheel
    from z3conn.graph import complete_bipartite
    path = tmp_path / "w4.txt"
    path.write_text(format_edgelist(wheel(4)))
    code, out, _ = run_cli("certify", str(path))
    assert code == 0
    assert "contract-even-wheel" in out
    assert out.rstrip().endswith("done")
    path.write_text(format_edgelist(complete_bipartite(3, 3)))
    code, out, _ = run_cli("certify", str(path))
    assert code == 1
    assert out.strip() == "unknown"


def test_enumerate_command():
    code, out, _ = run_cli("enumerate", "(3^4)")
    assert code == 0
    assert "# total: 1" in out
    code, out, _ = run_cli("enumerate", "(4,3^6)", "--dedup")
    assert code == 0
    assert "# total: 4" in out
    code, out, _ = run_cli("enumerate", "(3^6)", "--limit", "3")
    assert "# total: 3" in out
    code, out, _ = run_cli("enumerate", "(3,3,1,1)")
    assert code == 1
    assert "# total: 0" in out


def test_sweep_command_small():
    code, out, _ = run_cli("sweep", "--n-min", "6", "--n-max", "6")
    assert code == 0
    assert "0 failures" in out
    assert "route=" in out


def test_oracle_cap_flag(tmp_path):
    from z3conn.builder import realize
    from z3conn.seqcore import parse_sequence
    # a 16-vertex graph trips the default cap unless proved by certificate
    res = realize(parse_sequence("(14,4,3^14)"))
    path = tmp_path / "big.txt"
    path.write_text(format_edgelist(res.graph))
    code, _, err = run_cli("verify", str(path))
    assert code == 2
    assert "oracle" in err
