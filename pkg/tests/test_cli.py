import io
import json
import subprocess
import sys

import pytest

from conftest import SEVEN_FACET_TEXT
from lincolor.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in {
        "ex": SEVEN_FACET_TEXT,
        "path": "1 2\n2 3\n",
        "tri": "1 2\n1 3\n2 3\n",
        "c6": "".join(f"{i} -- {i % 6 + 1}\n" for i in range(1, 7)),
        "anti": "a\nb\nc\n",
        "vee": "a < b\na < c\n",
        "chain": "1 < 2\n2 < 3\n",
        "close": "1 -> 2\n",
        "good": "1 1\n2 1\n3 2\n",
        "bad": "1 1\n2 2\n3 1\n",
        "pt": "2\n",
    }.items():
        p = tmp_path / name
        p.write_text(text)
        paths[name] = str(p)
    paths["dir"] = tmp_path
    return paths


def test_lchr(files):
    code, out = run("lchr", "--input", files["ex"])
    assert code == 0 and out.splitlines()[0] == "lchr=6"


def test_nonevasive(files):
    assert run("nonevasive", "--input", files["ex"]) == (0, "nonevasive=true\n")
    assert run("nonevasive", "--input", files["tri"]) == (1, "nonevasive=false\n")


def test_irreducible(files):
    assert run("irreducible", "--input", files["ex"])[0] == 0
    code, out = run("irreducible", "--input", files["path"])
    assert code == 1 and "witness=2,1" in out


def test_check_coloring(files):
    assert run("check-coloring", "--input", files["path"], "--coloring", files["good"])[0] == 0
    code, out = run("check-coloring", "--input", files["path"], "--coloring", files["bad"])
    assert code == 1 and "linear=false" in out


def test_collapse_and_verify(files):
    t = str(files["dir"] / "t.cert")
    code, out = run("collapse", "--input", files["ex"], "--target", "point", "--emit-trace", t)
    assert code == 0 and "collapsible=true" in out
    assert run("verify-trace", "--input", files["ex"], "--trace", t, "--target", "point")[0] == 0
    assert run("collapse", "--input", files["tri"])[0] == 1


def test_reduce_round_trip(files):
    t = str(files["dir"] / "p.cert")
    code, _ = run("reduce", "--input", files["path"], "--target", files["pt"], "--emit-trace", t)
    assert code == 0
    code, out = run("verify-trace", "--input", files["path"], "--trace", t)
    assert code == 0 and "final=2" in out
    assert run("reduce", "--input", files["ex"], "--target", "point")[0] == 1


def test_tampered_trace(files):
    t = files["dir"] / "p.cert"
    run("reduce", "--input", files["path"], "--target", "point", "--emit-trace", str(t))
    lines = t.read_text().splitlines()
    t.write_text("\n".join(lines[:2] + ["PRIM 1 2"]) + "\n")
    code, out = run("verify-trace", "--input", files["path"], "--trace", str(t))
    assert code == 1 and "valid=false" in out


def test_trace_for_other_complex_is_usage_error(files):
    t = str(files["dir"] / "p.cert")
    run("reduce", "--input", files["path"], "--emit-trace", t)
    assert run("verify-trace", "--input", files["tri"], "--trace", t)[0] == 64


def test_core_and_budget(files):
    code, out = run("core", "--input", files["tri"])
    assert code == 0 and "lindim=3" in out
    big = files["dir"] / "simplex"
    big.write_text("0 1 2 3 4 5 6 7\n")
    code, out = run("reduce", "--input", str(big), "--target", "point", "--budget", "2")
    assert code == 2 and "result=unknown" in out


def test_homology_json(files):
    code, out = run("homology", "--input", files["tri"], "--format", "json-lines")
    rec = json.loads(out)
    assert code == 0 and rec["homology"] == "H1=Z" and rec["homdim"] == 1


def test_graph_bound(files):
    code, out = run("graph-bound", "--input", files["c6"])
    assert code == 0 and out == "chi=2\nlchr=6\nbound_holds=true\n"


def test_poset_reduce(files):
    code, out = run("poset-reduce", "--input", files["anti"])
    assert code == 1 and "lc_contractible=false" in out
    code, out = run("poset-reduce", "--input", files["vee"])
    assert code == 0 and "lc_contractible=true" in out
    code, out = run("poset-reduce", "--input", files["chain"], "--closure", files["close"])
    assert code == 0 and "remaining=2,3" in out


def test_suite_report(files):
    rep = files["dir"] / "rep"
    code, out = run("suite", "--max-vertices", "3", "--report", str(rep))
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("index\tn_vertices") and len(lines) == 9
    assert (rep / "suite.tsv").read_text().splitlines()[0] == lines[0]
    for png in ("lchr_vs_lindim.png", "homdim_counts.png"):
        assert (rep / png).read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_suite_random_is_deterministic(files):
    a = run("suite", "--mode", "random", "--max-vertices", "5", "--samples", "5", "--seed", "3")
    b = run("suite", "--mode", "random", "--max-vertices", "5", "--samples", "5", "--seed", "3")
    assert a == b and a[0] == 0


def test_usage_errors(files):
    assert run("lchr")[0] == 64
    assert run("lchr", "--input", str(files["dir"] / "missing"))[0] == 64
    assert run("check-coloring", "--input", files["path"])[0] == 64
    assert run("suite", "--max-vertices", "9")[0] == 64
    with pytest.raises(SystemExit) as exc:
        run("frobnicate")
    assert exc.value.code == 64
    with pytest.raises(SystemExit) as exc:
        run("lchr", "--format", "xml")
    assert exc.value.code == 64


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "lincolor", "lchr", "--input", files["tri"]],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("lchr=3")
