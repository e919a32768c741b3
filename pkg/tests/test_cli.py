"""Tests for HeckeForge.py and the command modules."""

import json
from fractions import Fraction

import pytest

from commands.command_config import EXIT_FAILED, EXIT_OK, EXIT_SINGULAR, EXIT_USAGE
from commands.specialize_command import detect_kind
from core import matrices
from core.drinfeld import DrinfeldianRep, eval_rep
from core.errors import SchemaError
from core.scalar import ETA, Q, coerce, equal, invert, ratfunc_from_json, ratfunc_to_json
from HeckeForge import build_parser, run


def _stdout_json(capsys):
    return json.loads(capsys.readouterr().out)


class TestParser:
    """Tests for build_parser."""

    def test_every_command_registered(self):
        """Test that each sub-command parses with its required flags."""
        parser = build_parser()
        assert parser.parse_args(["verify-uq", "--n", "1"]).command == "verify-uq"
        assert parser.parse_args(["build-functor", "--module", "sign", "--l", "2", "--n", "2"]).module == "sign"
        assert parser.parse_args(["specialize", "--in", "x.json", "--q", "1"]).input == "x.json"

    def test_common_flags_after_command(self):
        """Test that --seed and --summary are accepted by every sub-command."""
        args = build_parser().parse_args(["verify-hecke", "--l", "2", "--seed", "9", "--summary"])
        assert args.seed == 9
        assert args.summary

    def test_missing_required_flag(self):
        """Test that argparse errors become exit status 2."""
        assert run(["verify-uq"]) == EXIT_USAGE


class TestVerifyCommands:
    """Tests for the verify-* commands."""

    def test_verify_hecke(self, capsys):
        """Test a passing verify-hecke run."""
        assert run(["verify-hecke", "--l", "2", "--samples", "3"]) == EXIT_OK
        doc = _stdout_json(capsys)
        assert doc["subject"] == "hecke[modified]"
        assert doc["status"] == "PASS"

    def test_verify_hecke_rank_out_of_range(self):
        """Test that l = 9 is a usage error."""
        assert run(["verify-hecke", "--l", "9"]) == EXIT_USAGE

    def test_verify_uq(self, capsys):
        """Test that verify-uq passes for n = 1."""
        assert run(["verify-uq", "--n", "1"]) == EXIT_OK
        assert _stdout_json(capsys)["status"] == "PASS"

    def test_verify_drinfeldian_entries(self, capsys):
        """Test that verify-drinfeldian reports ten relation entries."""
        assert run(["verify-drinfeldian", "--n", "2"]) == EXIT_OK
        doc = _stdout_json(capsys)
        assert len(doc["relations"]) == 10
        assert all(entry["status"] == "PASS" for entry in doc["relations"])

    def test_verify_drinfeldian_hopf(self, capsys):
        """Test that --hopf appends the xi Hopf checks."""
        assert run(["verify-drinfeldian", "--n", "2", "--hopf"]) == EXIT_OK
        ids = [entry["relation_id"] for entry in _stdout_json(capsys)["relations"]]
        assert "xi-hopf/xi-antipode" in ids
        assert len(ids) == 13

    def test_verify_drinfeldian_rank_one(self):
        """Test that n = 1 is a usage error."""
        assert run(["verify-drinfeldian", "--n", "1"]) == EXIT_USAGE

    def test_broken_rep_file_fails(self, json_file, capsys):
        """Test that a representation with xi transposed exits with status 1 and a witness."""
        rep = eval_rep(2)
        broken = DrinfeldianRep.from_weight_rep(rep, matrices.transpose(rep.xi))
        path = json_file(broken.to_json(), "broken.json")
        assert run(["verify-drinfeldian", "--rep", path]) == EXIT_FAILED
        failed = [entry for entry in _stdout_json(capsys)["relations"] if entry["status"] == "FAIL"]
        assert failed
        assert all(entry["witness"] is not None for entry in failed)

    def test_malformed_rep_file(self, tmp_path):
        """Test that invalid JSON is a usage error."""
        path = tmp_path / "bad.json"
        path.write_text("{not json", encoding="utf-8")
        assert run(["verify-yangian", "--rep", str(path)]) == EXIT_USAGE

    def test_verify_yangian(self, capsys):
        """Test a passing verify-yangian run."""
        assert run(["verify-yangian", "--n", "2"]) == EXIT_OK
        assert _stdout_json(capsys)["subject"] == "yangian"

    def test_summary_on_stderr(self, capsys):
        """Test that --summary writes the plain-text summary to stderr."""
        assert run(["verify-uq", "--n", "1", "--summary"]) == EXIT_OK
        assert capsys.readouterr().err.startswith("uq: PASS")

    def test_bad_thread_setting(self, monkeypatch):
        """Test that a non-integer thread cap is a usage error."""
        monkeypatch.setenv("HECKE_FORGE_THREADS", "many")
        assert run(["verify-uq", "--n", "1"]) == EXIT_USAGE

    def test_threaded_run_matches_sequential(self, monkeypatch, capsys):
        """Test that four worker threads give the same report as one."""
        run(["verify-uq", "--n", "2"])
        sequential = capsys.readouterr().out
        monkeypatch.setenv("HECKE_FORGE_THREADS", "4")
        run(["verify-uq", "--n", "2"])
        assert capsys.readouterr().out == sequential


class TestBuildCommand:
    """Tests for build-functor."""

    def test_trivial_bundle(self, tmp_path):
        """Test that the trivial module at (n, l) = (2, 2) gives a six-dimensional level-2 bundle."""
        out = tmp_path / "bundle.json"
        assert run(["build-functor", "--module", "trivial", "--l", "2", "--n", "2", "--out", str(out)]) == EXIT_OK
        bundle = json.loads(out.read_text(encoding="utf-8"))
        assert bundle["dim"] == 6
        assert bundle["level"] is True
        assert bundle["report"]["status"] == "PASS"
        assert DrinfeldianRep.from_json(bundle["rep"]).dim == 6

    def test_rational_a(self, capsys):
        """Test that --a fixes u_1 of the builtin module."""
        assert run(["build-functor", "--module", "sign", "--l", "2", "--n", "2", "--a", "3/2"]) == EXIT_OK
        assert _stdout_json(capsys)["dim"] == 3

    def test_module_file(self, json_file, capsys):
        """Test that a module can be read from JSON."""
        run(["export", "--what", "module", "--module", "sign", "--l", "2"])
        path = json_file(_stdout_json(capsys), "module.json")
        assert run(["build-functor", "--module-file", path, "--n", "3"]) == EXIT_OK
        assert _stdout_json(capsys)["dim"] == 6

    def test_missing_rank(self):
        """Test that a builtin module needs --l."""
        assert run(["build-functor", "--module", "trivial", "--n", "2"]) == EXIT_USAGE


class TestSpecializeCommand:
    """Tests for specialize."""

    def test_singular_ratfunc(self, json_file):
        """Test that eta/(q - q^-1) at q = 1 exits with status 3."""
        path = json_file(ratfunc_to_json(ETA * invert(Q - invert(Q))))
        assert run(["specialize", "--in", path, "--q", "1"]) == EXIT_SINGULAR

    def test_regular_ratfunc(self, json_file, capsys):
        """Test that q + q^-1 at q = 2 gives 5/2."""
        path = json_file(ratfunc_to_json(Q + invert(Q)))
        assert run(["specialize", "--in", path, "--q", "2"]) == EXIT_OK
        assert equal(ratfunc_from_json(_stdout_json(capsys)), coerce(Fraction(5, 2)))

    def test_needs_a_binding(self, json_file):
        """Test that specialize without bindings is a usage error."""
        path = json_file(ratfunc_to_json(Q))
        assert run(["specialize", "--in", path]) == EXIT_USAGE

    def test_rep_at_eta_zero(self, json_file, capsys):
        """Test that a specialized DrinfeldianRep keeps its bindings."""
        path = json_file(eval_rep(2).to_json())
        assert run(["specialize", "--in", path, "--eta", "0", "--u", "2"]) == EXIT_OK
        assert _stdout_json(capsys)["bindings"] == {"eta": "0", "u": "2"}

    def test_detect_kind(self):
        """Test document type detection."""
        assert detect_kind({"num": [], "den": []}) == "ratfunc"
        assert detect_kind({"l": 2, "sigma": [], "u": []}) == "hecke-module"
        assert detect_kind({"l": 2, "terms": []}) == "aha-element"
        with pytest.raises(SchemaError):
            detect_kind({"unknown": 1})


class TestExportCommand:
    """Tests for export."""

    def test_t_operator(self, capsys):
        """Test that the exported T for n = 1 is 4 x 4."""
        assert run(["export", "--what", "t-operator", "--n", "1"]) == EXIT_OK
        doc = _stdout_json(capsys)
        assert doc["legs"] == 2
        assert len(doc["rows"]) == 4

    def test_natural(self, capsys):
        """Test the exported natural representation."""
        assert run(["export", "--what", "natural", "--n", "2"]) == EXIT_OK
        assert _stdout_json(capsys)["weights"] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]

    def test_generator_needs_index(self):
        """Test that --what generator without --index is a usage error."""
        assert run(["export", "--what", "generator", "--l", "2"]) == EXIT_USAGE

    def test_generator_out_of_range(self):
        """Test that sigma_2 on l = 2 is a usage error."""
        assert run(["export", "--what", "generator", "--l", "2", "--index", "2"]) == EXIT_USAGE
