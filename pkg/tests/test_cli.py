"""Command-line surface: output formats, exit codes, config handling."""

import json

from arcmellin import ClosedForm, cli_main, log_integral_odd_cosh


def run(capsys, *argv):
    code = cli_main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestClosedFormCommand:
    def test_latex_output(self, capsys):
        code, out, _ = run(capsys, "closed-form", "log-odd", "--q", "0", "--n", "1", "--latex")
        assert code == 0
        assert r"-3\,\frac{\zeta'(2)}{\pi^{2}}" in out

    def test_json_output_parses(self, capsys):
        code, out, _ = run(capsys, "closed-form", "log-even", "--q", "0", "--n", "1", "--json")
        assert code == 0
        assert ClosedForm.from_json(out) == ClosedForm.from_json(
            '{"terms": [{"symbol": "beta_prime_ratio", "p": 0, "coeff": "-4/1"},'
            ' {"symbol": "lnpi", "coeff": "1/1"}, {"symbol": "ln2", "coeff": "-1/1"}]}'
        )

    def test_sinh_over_z_uses_full_exponent(self, capsys):
        code, out, _ = run(capsys, "closed-form", "sinh-over-z", "--q", "1", "--n", "4", "--json")
        assert code == 0
        data = json.loads(out)
        assert {"symbol": "one", "coeff": "5/18"} in data["terms"]

    def test_divergent_parameters_exit_2(self, capsys):
        code, _, err = run(capsys, "closed-form", "log-odd", "--q", "3", "--n", "2")
        assert code == 2
        assert "convergence" in err

    def test_unknown_family_exit_2(self, capsys):
        code, _, _ = run(capsys, "closed-form", "nonsense", "--q", "0", "--n", "1")
        assert code == 2


class TestPhiOddCommand:
    def test_json(self, capsys):
        code, out, _ = run(capsys, "phi-odd", "1", "--n", "1", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["terms"][0] == {"symbol": "eta_prime_neg", "i": 0, "coeff": "4/3"}

    def test_pole_exit_2(self, capsys):
        code, _, err = run(capsys, "phi-odd", "2", "--n", "0")
        assert code == 2
        assert "pole" in err


class TestVerifyCommand:
    def test_identity_suite_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "alt-binom-odd", "--range", "1..10")
        assert code == 0
        assert "PASS" in out

    def test_json_report(self, capsys):
        code, out, _ = run(capsys, "verify", "d-identity", "--range", "0..4", "--json")
        assert code == 0
        assert json.loads(out)["passed"] is True

    def test_even_relations_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "even-relations", "--prec", "25")
        assert code == 0
        assert "even-relations: PASS (7 cells" in out

    def test_bad_range_exit_2(self, capsys):
        code, _, _ = run(capsys, "verify", "alt-binom-odd", "--range", "oops")
        assert code == 2

    def test_unknown_suite_exit_2(self, capsys):
        code, _, _ = run(capsys, "verify", "not-a-suite")
        assert code == 2


class TestEvalCommand:
    def test_evaluates_file(self, capsys, tmp_path):
        path = tmp_path / "form.json"
        path.write_text(log_integral_odd_cosh(0, 1).to_json())
        code, out, _ = run(capsys, "eval", "--json-file", str(path), "--prec", "25")
        assert code == 0
        # this instance happens to equal C1/2
        assert out.strip().startswith("-0.104752680901330382673")

    def test_missing_file_exit_2(self, capsys):
        code, _, _ = run(capsys, "eval", "--json-file", "/nonexistent.json")
        assert code == 2

    def test_malformed_json_exit_2(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"terms": [{"symbol": "one", "coeff": "x/y"}]}')
        code, _, err = run(capsys, "eval", "--json-file", str(path))
        assert code == 2
        assert "invalid input" in err


class TestConstantsCommand:
    def test_prints_both_constants(self, capsys):
        code, out, _ = run(capsys, "constants", "--prec", "25")
        assert code == 0
        assert "-0.209505361802660765" in out
        assert "0.205973120512140692" in out
        assert "gamma" in out


class TestConfigFile:
    def test_config_supplies_default_prec(self, capsys, tmp_path):
        cfg = tmp_path / "arcmellin.cfg"
        cfg.write_text("prec = 21\n# comment\n")
        path = tmp_path / "form.json"
        path.write_text('{"terms": [{"symbol": "one", "coeff": "3/4"}]}')
        code, out, _ = run(capsys, "--config", str(cfg), "eval", "--json-file", str(path))
        assert code == 0
        assert out.strip() == "0.75"

    def test_config_supplies_default_range(self, capsys, tmp_path):
        cfg = tmp_path / "arcmellin.cfg"
        cfg.write_text("range = 1..5\n")
        code, out, _ = run(capsys, "--config", str(cfg), "verify", "alt-binom-odd")
        assert code == 0
        assert "(20 cells" in out  # n = 1..5 gives sum(n+1) = 20 cells

    def test_bad_config_exit_2(self, capsys, tmp_path):
        cfg = tmp_path / "arcmellin.cfg"
        cfg.write_text("prec = lots\n")
        code, _, err = run(capsys, "--config", str(cfg), "constants")
        assert code == 2
        assert "bad config" in err


class TestReproduceCommand:
    def test_reproduce_all_tables(self, capsys):
        code, out, _ = run(capsys, "reproduce-paper", "--prec", "25")
        assert code == 0
        assert out.count("[ok ]") == 35
        assert "FAIL" not in out


class TestVerifyAll:
    def test_every_suite_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "all", "--prec", "25")
        assert code == 0
        assert "FAIL" not in out
        assert out.count("PASS") >= 16
