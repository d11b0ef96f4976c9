"""CLI subcommands, exit codes, and the JSON report contract."""

import json
import pathlib

import jsonschema
import pytest

from bipancert.cli import main
from bipancert.graphs import generate_g1, serialize_graph

SCHEMA = json.loads(
    (pathlib.Path(__file__).resolve().parent.parent / "schema"
     / "report.schema.v1.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def validate(doc):
    jsonschema.validate(doc, SCHEMA)


@pytest.fixture
def g1_file(tmp_path):
    path = tmp_path / "g1.bg"
    path.write_text(serialize_graph(generate_g1(4)))
    return str(path)


class TestGen:
    def test_g1_then_oracle(self, capsys, tmp_path):
        out = tmp_path / "g.bg"
        code, _, _ = run(capsys, "gen", "g1", "--n", "4", "-o", str(out))
        assert code == 0
        code, stdout, _ = run(capsys, "oracle", "--input", str(out), "--json")
        assert code == 0
        doc = json.loads(stdout)
        validate(doc)
        assert doc["oracle"]["missing_even_lengths"] == [8]
        assert doc["oracle"]["hamiltonian"] is False
        assert doc["oracle"]["kappa"] == 2

    def test_complete(self, capsys, tmp_path):
        out = tmp_path / "k.bg"
        code, _, _ = run(capsys, "gen", "complete", "--s", "4", "--t", "4",
                         "-o", str(out))
        assert code == 0
        assert "bipartite 4 4 16" in out.read_text()

    def test_g1_too_small_is_usage_error(self, capsys, tmp_path):
        code, _, err = run(capsys, "gen", "g1", "--n", "3",
                           "-o", str(tmp_path / "x.bg"))
        assert code == 1 and "n >= 4" in err


class TestCertify:
    def test_k44_with_oracle(self, capsys, tmp_path):
        out = tmp_path / "k.bg"
        run(capsys, "gen", "complete", "--s", "4", "--t", "4", "-o", str(out))
        code, stdout, _ = run(capsys, "certify", "--input", str(out),
                              "--with-oracle", "--json")
        assert code == 0
        doc = json.loads(stdout)
        validate(doc)
        assert doc["certificate"]["certified_bipancyclic"] is True
        assert doc["soundness_ok"] is True

    def test_g1_not_certified(self, capsys, g1_file):
        code, stdout, _ = run(capsys, "certify", "--input", g1_file,
                              "--with-oracle", "--json")
        assert code == 0
        doc = json.loads(stdout)
        validate(doc)
        assert doc["certificate"]["certified_bipancyclic"] is False
        assert doc["certificate"]["lemma6"] == "is_g1"

    def test_exact_thresholds(self, capsys, g1_file):
        code, stdout, _ = run(capsys, "certify", "--input", g1_file,
                              "--json", "--exact-thresholds")
        assert code == 0
        doc = json.loads(stdout)
        validate(doc)
        assert doc["certificate"]["theorems"]["T2"]["threshold"] == "6"

    def test_eigenvalue_precision(self, capsys, g1_file):
        _, stdout, _ = run(capsys, "certify", "--input", g1_file, "--json")
        doc = json.loads(stdout)
        lam = doc["certificate"]["spectral"]["lambda1"]
        # at least 12 significant digits survive the round trip
        assert abs(lam - 3.236067977499) < 1e-11

    def test_human_output(self, capsys, g1_file):
        code, stdout, _ = run(capsys, "certify", "--input", g1_file)
        assert code == 0
        assert "certified bipancyclic: False" in stdout


class TestExitCodes:
    def test_malformed_arguments(self, capsys):
        code, _, _ = run(capsys, "certify")
        assert code == 1
        code, _, _ = run(capsys, "hunt", "--n", "nope", "--exhaustive")
        assert code == 1

    def test_missing_file(self, capsys):
        code, _, _ = run(capsys, "certify", "--input", "/no/such/file.bg")
        assert code == 2

    def test_parse_failure(self, capsys, tmp_path):
        bad = tmp_path / "bad.bg"
        bad.write_text("not a graph\n")
        code, _, _ = run(capsys, "oracle", "--input", str(bad))
        assert code == 2

    def test_hunt_exhaustive_too_large(self, capsys):
        code, _, _ = run(capsys, "hunt", "--n", "6", "--exhaustive",
                         "--check", "l2")
        assert code == 1

    def test_certify_soundness_mismatch_exits_3(self, capsys, tmp_path,
                                                monkeypatch):
        # soundness failures do not exist for real, so fake a certificate
        # that over-claims and confirm the oracle cross-check trips exit 3
        import bipancert.cli as cli_mod
        from bipancert.graphs import generate_g1, serialize_graph

        path = tmp_path / "g.bg"
        path.write_text(serialize_graph(generate_g1(4)))
        real = cli_mod.cert.full_certificate

        def overclaim(g):
            r = real(g)
            object.__setattr__(r, "certified_bipancyclic", True)
            return r

        monkeypatch.setattr(cli_mod.cert, "full_certificate", overclaim)
        code, stdout, _ = run(capsys, "certify", "--input", str(path),
                              "--with-oracle", "--json")
        assert code == 3
        assert json.loads(stdout)["soundness_ok"] is False


class TestBounds:
    def test_json(self, capsys, g1_file):
        code, stdout, _ = run(capsys, "bounds", "--input", g1_file, "--json")
        assert code == 0
        doc = json.loads(stdout)
        validate(doc)
        lemmas = [b["lemma"] for b in doc["bounds"]]
        assert lemmas == ["L2", "L3", "L4", "L5"]

    def test_table(self, capsys, g1_file):
        code, stdout, _ = run(capsys, "bounds", "--input", g1_file)
        assert code == 0 and "L5" in stdout


class TestHunt:
    def test_small_exhaustive(self, capsys, tmp_path):
        code, stdout, _ = run(capsys, "hunt", "--n", "3", "--exhaustive",
                              "--min-degree", "2", "--connected",
                              "--check", "l2", "--json")
        assert code == 0
        doc = json.loads(stdout)
        validate(doc)
        assert doc["report"]["properties"]["l2"]["counterexamples"] == []

    def test_random_run_deterministic_bytes(self, capsys):
        argv = ["hunt", "--n", "4", "--random", "50", "--p", "0.5",
                "--seed", "11", "--check", "l4", "--json"]
        code1, out1, _ = run(capsys, *argv)
        code2, out2, _ = run(capsys, *argv)
        assert code1 == code2 == 0 and out1 == out2

    def test_outdir_empty_on_passing_run(self, capsys, tmp_path):
        outdir = tmp_path / "cex"
        code, _, _ = run(capsys, "hunt", "--n", "3", "--exhaustive",
                         "--check", "l4", "--outdir", str(outdir), "--json")
        assert code == 0
        assert not outdir.exists() or not any(outdir.iterdir())

    def test_outdir_dump_and_exit3_on_failure(self, capsys, tmp_path,
                                              monkeypatch):
        # no real counterexamples to the theorems exist, so fake one to
        # exercise the dump layout and the failure exit code
        import bipancert.cli as cli_mod
        from bipancert.hunt import HuntReport, PropertyResult

        fake = HuntReport(graphs_examined=1, graphs_passing_filters=1,
                          properties={"l2": PropertyResult(
                              checked=1, premise_satisfied=1,
                              counterexamples=["bipartite 1 1 1\n0 0\n"])},
                          wall_time_s=0.0)
        monkeypatch.setattr(cli_mod.hunt_mod, "run_hunt",
                            lambda *a, **k: fake)
        outdir = tmp_path / "cex"
        code, _, _ = run(capsys, "hunt", "--n", "3", "--exhaustive",
                         "--check", "l2", "--outdir", str(outdir), "--json")
        assert code == 3
        dumped = outdir / "l2" / "0.bg"
        assert dumped.read_text() == "bipartite 1 1 1\n0 0\n"
