"""Command-line tests."""
import json

import pytest

from wildcover import config
from wildcover.main import main


def _family_file(tmp_path, capsys, *args):
    assert main(["family", *args]) == 0
    path = tmp_path / "cover.spec"
    path.write_text(capsys.readouterr().out, encoding="utf-8")
    return str(path)


def test_sigma(capsys):
    """Test the digit-sum level in text and JSON."""
    assert main(["sigma", "X^11", "-p", "5"]) == 0
    assert capsys.readouterr().out.strip() == "level 3"
    assert main(["--json", "sigma", "X^11", "-p", "5"]) == 0
    assert json.loads(capsys.readouterr().out) == {"input": "X^11", "level": 3, "dp_order": 3}
    assert main(["sigma", "X^11", "-p", "5", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["level"] == 3


def test_reduce(capsys):
    """Test the reduced representative and its constant class."""
    assert main(["reduce", "X^10 + 3", "-p", "5"]) == 0
    assert capsys.readouterr().out.strip() == "X^2  (constant class 3)"


def test_palindromic(capsys):
    """Test Ad_f with its splitting degree."""
    assert main(["palindromic", "X^6 + 4X^2", "-p", "5", "--splitting-field"]) == 0
    assert capsys.readouterr().out.strip() == "Ad = F^2 + 3*F + 1  (splits over F_5^5)"


def test_adapt(capsys):
    """Test that equal leading terms are eliminated."""
    assert main(["adapt", "X^6 + 4X^2", "X^6 + 4X^2 + X^3", "-p", "5"]) == 0
    assert capsys.readouterr().out.splitlines() == ["degrees (3, 6)", "f1 = X^3", "f2 = X^6 + 4*X^2"]


def test_malformed_polynomial(capsys):
    """Test exit code 2 and the position of the error."""
    assert main(["reduce", "X^", "-p", "5"]) == 2
    assert capsys.readouterr().err.strip() == "error: 1:3: unexpected end of input"


def test_family_then_verify(tmp_path, capsys):
    """Test the printed special family through verify."""
    path = _family_file(tmp_path, capsys, "special", "-p", "5", "-n", "2")
    assert main(["verify", path]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["passed"]
    assert report["ramification"]["ratio"] == "625/110"
    assert report["ramification"]["genus"] == 110
    assert report["levels_maximal"] and report["subdiagonals_nonzero"]
    assert main(["invariants", path]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["levels"] == [2, 3]
    assert report["basis"]["degrees"] == [6, 11]


def test_verify_reports_translations_that_do_not_lift(tmp_path, capsys):
    """Test exit code 1 when a basis vector of V does not lift."""
    path = tmp_path / "bad.spec"
    path.write_text("p=5 m=2 modulus=t^2+2\nf1 = 4X^6 + X^2\nV = basis: 1, t\n", encoding="utf-8")
    assert main(["verify", str(path)]) == 1
    assert capsys.readouterr().err.startswith("error: ")


def test_missing_spec_file(tmp_path, capsys):
    """Test that an unreadable spec is an input error."""
    assert main(["verify", str(tmp_path / "missing.spec")]) == 2
    assert "cannot read" in capsys.readouterr().err


def test_family_needs_p(capsys):
    """Test that -p is required outside the universal family."""
    assert main(["family", "special", "-n", "2"]) == 2
    assert main(["family", "universal", "-n", "2", "--b0", "1"]) == 0
    assert "f2 = X^11 + 4*X^7" in capsys.readouterr().out


def test_iso(capsys):
    """Test the exit code of the isomorphism criterion."""
    assert main(["iso", "--b0", "1", "--b5", "1", "--b0-prime", "1", "--b5-prime", "4"]) == 0
    assert capsys.readouterr().out.strip() == "isomorphic"
    assert main(["iso", "--b0", "1", "--b5", "1", "--b0-prime", "1", "--b5-prime", "2"]) == 1
    assert capsys.readouterr().out.strip() == "not isomorphic"


def test_group(tmp_path, capsys):
    """Test the extraspecial group of one equation."""
    path = _family_file(tmp_path, capsys, "special", "-p", "5", "-n", "1")
    assert main(["group", path, "--element-order"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["order"] == 125
    assert report["exponent"] == 5
    assert report["center_order"] == 5
    assert set(report["element_orders"]) == {5}
    assert all(check["passed"] for check in report["checks"])


def test_usage_errors():
    """Test that argparse rejects a missing subcommand."""
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_gamma_family_under_both_names(capsys):
    """Test that prop43 and gamma print the same trivial-representation cover."""
    args = ["-p", "5", "-m", "2", "-d", "2", "--gamma", "1", "--gamma", "t", "--s1", "X^25"]
    assert main(["family", "prop43", *args]) == 0
    out = capsys.readouterr().out
    assert out.startswith("p=5 m=8")
    assert "f1 = X^26" in out
    assert main(["family", "gamma", *args]) == 0
    assert capsys.readouterr().out == out


def test_family_honours_the_ambient_bound(capsys):
    """Test that the splitting field search stops at --ambient-bound."""
    assert main(["--ambient-bound", "4", "family", "special", "-p", "5", "-n", "2"]) == 2
    assert "does not split" in capsys.readouterr().err
    assert main(["family", "special", "-p", "5", "-n", "2", "--ambient-bound", "5"]) == 0


def test_config_reads_the_environment():
    """Test that the search bounds come from WILDCOVER_* variables."""
    assert config.AMBIENT_BOUND == 12
    assert config.CLOSURE_BOUND == 20000
