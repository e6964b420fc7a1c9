"""
Unit tests for the command-line front end.
"""
import json

from src.cli.main import build_parser, run_cli
from src.cli.schemas import CodeSpecModel
from tests.fixtures.specs import create_test_spec

MDS_FLAGS = ["--p", "7", "--m", "1", "--alpha", "1,2,3,4", "--k", "3", "--eta", "2", "--extended"]
NMDS_FLAGS = ["--p", "7", "--m", "1", "--alpha", "1,2,3,4", "--k", "3", "--eta", "1", "--extended"]


def run(capsys, *argv):
    code = run_cli(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestParser:
    """Test argument parsing."""

    def test_subcommands(self):
        """Test every subcommand is registered."""
        parser = build_parser()
        for name in ("field", "construct", "classify", "weights", "dual", "schur", "check-so"):
            args = parser.parse_args([name, "--q", "7"])
            assert args.command == name
        assert parser.parse_args(["build", "trace"]).construction == "trace"

    def test_help(self, capsys):
        """Test --help returns 0."""
        code, out, _ = run(capsys, "--help")
        assert code == 0
        assert "refute" in out

    def test_missing_subcommand(self, capsys):
        """Test usage errors exit with 2."""
        code, _, err = run(capsys)
        assert code == 2
        assert "usage error" in err

    def test_unknown_flag(self, capsys):
        """Test an unknown flag is a usage error."""
        code, _, _ = run(capsys, "classify", "--bogus")
        assert code == 2

    def test_field_conflict(self, capsys):
        """Test --q together with --p is refused."""
        code, _, err = run(capsys, "field", "--q", "7", "--p", "7")
        assert code == 2
        assert "either --q or --p/--m" in err

    def test_bad_list(self, capsys):
        """Test a malformed --alpha."""
        code, _, _ = run(capsys, "classify", "--q", "7", "--alpha", "1,x", "--k", "3", "--extended")
        assert code == 2


class TestCommands:
    """Test subcommand output."""

    def test_classify_mds(self, capsys):
        """Test the MDS example."""
        code, out, _ = run(capsys, "classify", *MDS_FLAGS)
        assert code == 0
        assert out.splitlines()[0] == "MDS, A_min=0"

    def test_classify_nmds_verified(self, capsys):
        """Test the NMDS example with brute-force verification."""
        code, out, _ = run(capsys, "classify", *NMDS_FLAGS, "--verify", "--json")
        data = json.loads(out)
        assert code == 0
        assert data["classification"] == "NMDS"
        assert data["a_min"] == "6"
        assert data["witness_subset"] == [1, 2, 3]
        assert data["verified"] is True

    def test_classify_needs_extended(self, capsys):
        """Test classification of a plain spec is a usage error."""
        code, _, _ = run(capsys, "classify", "--q", "7", "--alpha", "1,2,3,4", "--k", "3")
        assert code == 2

    def test_domain_error(self, capsys):
        """Test a non prime power order exits with 1."""
        code, _, err = run(capsys, "field", "--q", "6")
        assert code == 1
        assert "error: " in err

    def test_field_table(self, capsys):
        """Test the element table of GF(9)."""
        code, out, _ = run(capsys, "field", "--q", "9", "--table")
        assert code == 0
        assert "x + 1" in out

    def test_weights(self, capsys):
        """Test the weight table with verification."""
        code, out, _ = run(capsys, "weights", *NMDS_FLAGS, "--verify", "--json")
        data = json.loads(out)
        assert code == 0
        assert data["code"]["classification"] == "NMDS"
        assert data["code"]["counts"][2] == "6"
        assert sum(int(c) for c in data["dual"]["counts"]) == 49

    def test_dual(self, capsys):
        """Test the parity-check matrix has n + 1 - k rows."""
        code, out, _ = run(capsys, "dual", *MDS_FLAGS, "--json")
        assert code == 0
        assert len(json.loads(out)["generator"]) == 2

    def test_schur(self, capsys):
        """Test the low-rate certificate."""
        code, out, _ = run(
            capsys, "schur", "--q", "7", "--alpha", "1,2,3,4,5,6", "--k", "3", "--extended", "--verify"
        )
        assert code == 0
        assert "low-rate-dimension" in out
        assert "6" in out

    def test_check_so(self, capsys):
        """Test a short code is reported as not self-orthogonal."""
        code, out, _ = run(capsys, "check-so", "--q", "7", "--alpha", "1,2,3,4,5", "--k", "3", "--extended")
        assert code == 0
        assert out.strip() == "not self-orthogonal"

    def test_build_trace(self, capsys):
        """Test the GF(9) trace construction."""
        code, out, _ = run(capsys, "build", "trace", "--p", "3", "--m", "2", "--r", "1", "--json")
        data = json.loads(out)
        assert code == 0
        assert data["length"] == 7
        assert data["dimension"] == 3
        assert data["certificate"]["type"] == "almost-self-dual"
        assert data["certificate"]["verified"] is True

    def test_build_even_text(self, capsys):
        """Test the even construction prints its verdict."""
        code, out, _ = run(capsys, "build", "even", "--q", "16", "--k", "3")
        assert code == 0
        assert "self-dual" in out
        assert "[6, 3]" in out

    def test_build_bad_parity(self, capsys):
        """Test m/r odd exits with 1."""
        code, _, _ = run(capsys, "build", "trace", "--p", "3", "--m", "2", "--r", "2")
        assert code == 1

    def test_search(self, capsys):
        """Test the GF(5) census."""
        code, out, _ = run(capsys, "search", "--q", "5", "--k", "2", "--n", "3", "--json")
        data = json.loads(out)
        assert code == 0
        assert data["total"] == 40
        assert data["tallies"] == {"MDS": 16, "NMDS": 24}

    def test_refute(self, capsys):
        """Test the GF(5) refutation summary."""
        code, out, _ = run(capsys, "refute", "--q", "5", "--k", "3")
        assert code == 0
        assert out.strip() == "no self-dual (+)-ETGRS found; 4096 specs checked"


class TestSpecFiles:
    """Test JSON spec input."""

    def test_construct_then_classify(self, capsys, tmp_path):
        """Test construct output is accepted by classify."""
        code, out, _ = run(capsys, "construct", *MDS_FLAGS, "--json")
        assert code == 0
        path = tmp_path / "code.json"
        path.write_text(out)
        code, out, _ = run(capsys, "classify", "--spec", str(path))
        assert code == 0
        assert out.splitlines()[0] == "MDS, A_min=0"

    def test_bare_spec(self, capsys, tmp_path):
        """Test a bare CodeSpec document."""
        path = tmp_path / "spec.json"
        model = CodeSpecModel.from_spec(create_test_spec(eta=1))
        path.write_text(model.model_dump_json())
        code, out, _ = run(capsys, "classify", "--spec", str(path))
        assert code == 0
        assert out.startswith("NMDS, A_min=6")

    def test_round_trip_is_stable(self, capsys, tmp_path):
        """Test construct output is byte-identical after re-ingestion."""
        _, first, _ = run(capsys, "construct", *MDS_FLAGS, "--json")
        path = tmp_path / "code.json"
        path.write_text(first)
        _, second, _ = run(capsys, "construct", "--spec", str(path), "--json")
        assert first == second

    def test_malformed_file(self, capsys, tmp_path):
        """Test a file that is not a spec."""
        path = tmp_path / "bad.json"
        path.write_text('{"alpha": [1, 2]}')
        code, _, _ = run(capsys, "classify", "--spec", str(path))
        assert code == 2

    def test_missing_file(self, capsys, tmp_path):
        """Test an unreadable path."""
        code, _, _ = run(capsys, "classify", "--spec", str(tmp_path / "missing.json"))
        assert code == 2
