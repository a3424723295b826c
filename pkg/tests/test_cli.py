import json
import os
import subprocess
import sys

import pytest

from cli_corpus import RUNS, c, run_cli, run_corpus


@pytest.fixture(scope="module")
def corpus_results(tmp_path_factory):
    return run_corpus(str(tmp_path_factory.mktemp("corpus")))


@pytest.mark.parametrize("label,argv,code", RUNS, ids=[r[0] for r in RUNS])
def test_corpus_exit_codes(corpus_results, label, argv, code):
    got, out, err, _ = corpus_results[label]
    assert got == code, err
    if code == 2:
        assert out == "" and err.startswith("error: ") and err.count("\n") == 1


def test_member_shifted_query():
    code, out, _ = run_cli(["member", "--ideal", c("ex1.ideal"), "--poly", "x{0}*x{1}^2 - x{1}*x{2}"])
    assert code == 0 and out.splitlines()[0] == "member"


def test_emb_pairs_five_lines():
    code, out, _ = run_cli(["emb-pairs", "--domain", "ord[1]", "--left", "{2}", "--right", "{1,3}"])
    assert code == 0
    assert set(out.splitlines()) == {
        "{2->2} {1->1,3->3}",
        "{2->2} {1->2,3->4}",
        "{2->2} {1->3,3->5}",
        "{2->3} {1->1,3->3}",
        "{2->4} {1->1,3->3}",
    }


def test_empty_ideal_rejects_one():
    assert run_cli(["member", "--ideal", c("empty.ideal"), "--poly", "1"])[0] == 1


def test_json_report_keys():
    code, out, _ = run_cli(["member", "--ideal", c("ex1.ideal"), "--poly", "x{0}*x{1}^2 - x{1}*x{2}",
                            "--json", "--seedless"])
    doc = json.loads(out)
    assert code == 0
    assert {"answer", "steps", "passes", "added", "millis"} <= set(doc)
    assert doc["answer"] == "member" and doc["millis"] == 0
    assert doc["passes"] == 1 and doc["added"] == 0 and doc["steps"] == 7


def test_json_names_certificate(tmp_path):
    cert = str(tmp_path / "x.cert")
    _, out, _ = run_cli(["member", "--ideal", c("ex1.ideal"), "--poly", "x{0} - 1", "--json",
                         "--certificate", cert])
    assert json.loads(out)["certificate"] == cert


def test_seedless_is_byte_identical(tmp_path):
    a = run_corpus(str(tmp_path / "a"))
    b = run_corpus(str(tmp_path / "b"))
    assert a.keys() == b.keys()
    for label in a:
        assert a[label][:3] == b[label][:3]
        assert a[label][3] == b[label][3]


def test_seedless_json_is_byte_identical(tmp_path):
    a = run_corpus(str(tmp_path / "a"), extra=("--seedless", "--json"))
    b = run_corpus(str(tmp_path / "b"), extra=("--seedless", "--json"))
    for label in a:
        # The certificate path differs by directory; everything else must not.
        strip = lambda r: r[1].replace(str(tmp_path / "a"), "").replace(str(tmp_path / "b"), "")
        assert strip(a[label]) == strip(b[label])


def test_positive_runs_ship_verifying_certificates(corpus_results, tmp_path):
    checked = 0
    for label, argv, code in RUNS:
        res = corpus_results[label]
        if code != 0 or res[3] is None or argv[0] == "reduce":
            continue
        path = tmp_path / (label + ".cert")
        path.write_text(res[3], encoding="utf-8")
        vcode, vout, _ = run_cli(["verify", "--certificate", str(path)])
        assert vcode == 0 and vout.splitlines() == ["valid", "member"], label
        checked += 1
    assert checked >= 8


def test_reduce_certificate_replays(corpus_results, tmp_path):
    path = tmp_path / "r.cert"
    path.write_text(corpus_results["reduce-ex1"][3], encoding="utf-8")
    assert run_cli(["verify", "--certificate", str(path)])[0] == 0


def test_tampered_certificate_rejected(corpus_results, tmp_path):
    text = corpus_results["member-ex1"][3]
    assert "r=-1 " in text
    path = tmp_path / "bad.cert"
    path.write_text(text.replace("r=-1 ", "r=-2 ", 1), encoding="utf-8")
    code, out, _ = run_cli(["verify", "--certificate", str(path)])
    assert code == 1 and out.strip() == "invalid"


def test_reduced_certificate_is_annotated(corpus_results):
    text = corpus_results["member-q"][3]
    assert text.startswith("# instance over q reduced to ord[2]\n")


def test_approximate_certificate_is_annotated(tmp_path):
    cert = str(tmp_path / "a.cert")
    run_cli(["petri-reach", "--net", c("oneway.petri"), "--from", "x{(0|1)}", "--to", "x{(0|0)}",
             "--approximate", "--certificate", cert])
    assert "upper approximation" in open(cert).read().splitlines()[0]


def test_gb_output_reparses(corpus_results, tmp_path):
    from eqideal.textio import parse_ideal

    for label in ("gb-ex1", "gb-binom", "gb-omega2", "gb-fin3"):
        text = corpus_results[label][1]
        ideal = parse_ideal(text)
        assert len(ideal.gens) == sum(1 for line in text.splitlines() if line.startswith("gen "))


@pytest.mark.parametrize("argv,kind", [
    ([], "usage"),
    (["member", "--ideal", c("ex1.ideal")], "usage"),
    (["member", "--ideal", c("ex1.ideal"), "--poly", "x{0} +"], "syntax"),
    (["member", "--ideal", c("ex1.ideal"), "--poly", "x{<1,0>}"], "domain"),
    (["member", "--ideal", "/nonexistent.ideal", "--poly", "1"], "io"),
    (["member", "--ideal", c("ex1.ideal"), "--poly", "1", "--field", "gf:9"], "domain"),
    (["reduce", "--ideal", c("exq.ideal"), "--poly", "1"], "validation"),
    (["member", "--ideal", c("ex1.ideal"), "--poly", "x{0}*x{1}^2 - x{1}*x{2}", "--fuel-steps", "1"],
     "internal"),
    (["gb", "--ideal", c("ex_omega2.ideal"), "--fuel-passes", "1"], "resource"),
    (["emb-check", "--domain", "ord[0]", "--map", "{}"], "syntax"),
    (["linsolve", "--family", c("weighted.family"), "--target", "u[(0,1)]"], "validation"),
])
def test_errors_are_one_line(argv, kind):
    code, out, err = run_cli(argv)
    assert code == 2 and out == ""
    assert err.startswith(f"error: {kind}: ") and err.count("\n") == 1


def test_check_family_reports_missing_orbits(tmp_path):
    fam = tmp_path / "partial.family"
    fam.write_text("dim 1\narity 2\ndomain ord[1]\nrow (0,1) = 1*u[(0)]\n", encoding="utf-8")
    code, _, err = run_cli(["linsolve", "--family", str(fam), "--target", "u[(0)]", "--check-family"])
    assert code == 2 and "misses 2 orbit(s)" in err
    assert run_cli(["linsolve", "--family", str(fam), "--target", "u[(0)]"])[0] == 0


def test_console_script_entry_point():
    env = dict(os.environ)
    out = subprocess.run(
        [sys.executable, "-m", "eqideal.cli", "emb-check", "--domain", "ord[2]", "--map", "{<0,1>-><1,0>}"],
        capture_output=True, text=True, env=env, check=False,
    )
    assert out.returncode == 0 and out.stdout == "extends\n"
