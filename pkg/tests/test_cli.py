"""Command-line interface: outputs, exit codes, determinism, figures."""

import json

import pytest
from click.testing import CliRunner

from vknot import cli

try:
    import jsonschema
except ImportError:  # pragma: no cover
    jsonschema = None

VT = "closed: O1+ O2+ U1+ U2+"


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(cli.main, list(args), catch_exceptions=False)


def test_odd_writhe_golden(runner):
    res = invoke(runner, "invariants", "--inline", VT, "--odd-writhe")
    assert res.exit_code == 0
    assert "odd-writhe: 2" in res.output


def test_kishino_f_from_file(runner, tmp_path):
    path = tmp_path / "ki.gauss"
    path.write_text("# bundled diagram\nclosed: O1+ U2- U1+ O2- O3+ U4- U3+ O4-\n")
    res = invoke(runner, "invariants", str(path), "--f")
    assert res.exit_code == 0
    assert "f: 1" in res.output


def test_empty_code_khovanov(runner):
    res = invoke(runner, "invariants", "--inline", "closed:", "--khovanov")
    assert res.exit_code == 0
    assert "khovanov: (0,-1):1 (0,1):1" in res.output


def test_json_deterministic_and_valid(runner):
    args = (
        "invariants", "--inline", VT, "--json", "--odd-writhe", "--f", "--jones",
        "--arrow", "--flat-arrow", "--parity-bracket", "--khovanov",
        "--arrow-homology",
    )
    out1 = invoke(runner, *args).output
    out2 = invoke(runner, *args).output
    assert out1 == out2
    report = json.loads(out1)
    assert report["input"] == VT
    assert "timing" not in report
    if jsonschema is not None:
        schema = json.load(open("docs/report.schema.json"))
        jsonschema.validate(report, schema)


def test_json_and_text_agree(runner):
    text = invoke(runner, "invariants", "--inline", VT, "--odd-writhe", "--f").output
    data = json.loads(
        invoke(
            runner, "invariants", "--inline", VT, "--odd-writhe", "--f", "--json"
        ).output
    )
    assert f"odd-writhe: {data['invariants']['odd-writhe']['value']}" in text
    assert f"f: {data['invariants']['f']['text']}" in text


def test_timing_opt_in(runner):
    out = invoke(runner, "invariants", "--inline", VT, "--odd-writhe", "--timing",
                 "--json").output
    assert "timing" in json.loads(out)


def test_exit_codes(runner):
    assert invoke(runner, "invariants", "--inline", "closed: O1?").exit_code == 2
    assert (
        invoke(
            runner, "invariants", "--inline", VT, "--f", "--max-crossings", "1"
        ).exit_code
        == 3
    )
    assert (
        invoke(
            runner, "invariants", "--inline", "long: F1+ F2+ F1+ F2+", "--f"
        ).exit_code
        == 4
    )
    assert invoke(runner, "corpus", "show", "no-such-entry").exit_code == 2


def test_multi_diagram_file_rejected(runner, tmp_path):
    path = tmp_path / "two.gauss"
    path.write_text("closed:\nclosed: O1+ U1+\n")
    assert invoke(runner, "invariants", str(path), "--odd-writhe").exit_code == 2


def test_scramble_deterministic(runner):
    a = invoke(runner, "scramble", "--inline", VT, "--moves", "30", "--seed", "5")
    b = invoke(runner, "scramble", "--inline", VT, "--moves", "30", "--seed", "5")
    assert a.exit_code == 0 and a.output == b.output
    from vknot.gauss import parse

    assert parse(a.output.strip()).odd_writhe() == 2


def test_check_invariance_passes(runner):
    res = invoke(
        runner,
        "check-invariance",
        "--inline",
        VT,
        "--trials",
        "5",
        "--moves",
        "8",
        "--max-crossings",
        "8",
    )
    assert res.exit_code == 0
    assert res.output.startswith("ok:")


def test_check_invariance_reports_mismatch(runner, monkeypatch):
    # force a disagreement to exercise the failure path and move trace
    calls = {"n": 0}

    def unstable(code, *a, **k):
        calls["n"] += 1
        return calls["n"]

    monkeypatch.setattr(cli, "f_poly", unstable)
    res = runner.invoke(
        cli.main,
        ["check-invariance", "--inline", VT, "--trials", "2", "--moves", "4",
         "--invariants", "f"],
    )
    assert res.exit_code == 1
    assert "mismatch: f" in res.output
    assert "move:" in res.output


def test_corpus_list_and_show(runner):
    listing = invoke(runner, "corpus", "list")
    assert listing.exit_code == 0
    assert len(listing.output.strip().splitlines()) >= 12
    shown = invoke(runner, "corpus", "show", "virtual-trefoil")
    assert shown.output.splitlines()[0] == VT
    assert "provenance: derived-from-figure" in shown.output
    stated = invoke(runner, "corpus", "show", "long-flat-F")
    assert "provenance: paper-stated" in stated.output


def test_figures_written(runner, tmp_path):
    outdir = tmp_path / "figs"
    res = invoke(
        runner,
        "invariants",
        "--inline",
        VT,
        "--khovanov",
        "--arrow-homology",
        "--figures",
        str(outdir),
    )
    assert res.exit_code == 0
    names = sorted(p.name for p in outdir.iterdir())
    assert names == ["arrow-homology.png", "khovanov.png"]
    for p in outdir.iterdir():
        assert p.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_z_mode_changes_parity_output(runner):
    ks = "closed: O1+ O2+ U1+ O3+ O4+ U2+ O5- U3+ U5- U4+"
    plain = invoke(runner, "invariants", "--inline", ks, "--parity-bracket").output
    z = invoke(
        runner, "invariants", "--inline", ks, "--parity-bracket", "--z-mode"
    ).output
    assert plain != z
    assert "(1 2 1 3)(2 4 3 4)" in z


def test_default_selection_flat(runner):
    res = invoke(runner, "invariants", "--inline", "long: F1+ F2+ F1+ F2+")
    assert res.exit_code == 0
    assert "flat-arrow:" in res.output and "odd-writhe:" in res.output
