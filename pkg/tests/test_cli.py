"""
Tests for the glpq-verify command line:
1. normalize and limit print canonical forms
2. Parse errors and unknown names exit with status 2
3. rules list and rhat dump their tables as text or JSON
4. verify runs a suite, lists the registry, writes the config on first use, and passes on every suite
"""

import json

import pytest

import main


class TestNormalize:
    def test_prints_normal_form(self, clean_env, capsys):
        assert main.main(["normalize", "a*d"]) == 0
        assert capsys.readouterr().out.strip() == "d*a + (p - q^-1)*g*b"

    def test_rule_set_option(self, clean_env, capsys):
        assert main.main(["normalize", "--rules", "left_calculus", "dLb*a"]) == 0
        assert capsys.readouterr().out.strip() == "p*a*dLb"

    def test_classical_limit(self, clean_env, capsys):
        assert main.main(["limit", "a*d - d*a"]) == 0
        assert capsys.readouterr().out.strip() == "0"


class TestUsageErrors:
    def test_parse_error(self, clean_env):
        assert main.main(["normalize", "a*zz"]) == 2

    def test_unknown_rule_set(self, clean_env):
        assert main.main(["normalize", "--rules", "RS_NOPE", "a"]) == 2

    def test_unknown_suite(self, clean_env):
        assert main.main(["verify", "nowhere"]) == 2

    def test_unknown_command(self, clean_env):
        with pytest.raises(SystemExit) as info:
            main.main(["frobnicate"])
        assert info.value.code == 2


class TestTables:
    def test_rules_json(self, clean_env, capsys):
        assert main.main(["rules", "list", "--set", "RS_A", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        table = payload["tables"][0]
        assert table["name"] == "RS_A"
        assert table["rank"] == ["g", "b", "d", "di", "a", "ai"]
        assert {"id": "A6", "lhs": "b*b", "rhs": "0"} in table["rules"]

    def test_rules_text(self, clean_env, capsys):
        assert main.main(["rules", "list", "--set", "RS_PLANE"]) == 0
        out = capsys.readouterr().out
        assert "# name: RS_PLANE" in out
        assert "PLANE1 | x*th | p*th*x" in out

    def test_rhat(self, clean_env, capsys):
        assert main.main(["rhat", "--format", "json"]) == 0
        rows = json.loads(capsys.readouterr().out)["rows"]
        assert rows[1] == ["0", "q - p^-1", "1", "0"]


class TestVerify:
    def test_list(self, clean_env, capsys):
        assert main.main(["verify", "--list"]) == 0
        out = capsys.readouterr().out
        assert "rmatrix.hecke" in out
        assert "rewrite.confluence" in out

    def test_suite_passes(self, clean_env, capsys):
        assert main.main(["verify", "rmatrix.hecke"]) == 0
        assert "overall: PASS" in capsys.readouterr().out
        assert (clean_env / "verify.config.json").exists()

    def test_json_report(self, clean_env, capsys):
        assert main.main(["verify", "catalog.koszul", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        entries = {e["relation"]: e for e in payload["results"][0]["result"]["entries"]}
        assert entries["printed-bc"]["outcome"] == "expected mismatch"

    @pytest.mark.slow
    def test_all_suites_pass(self, clean_env, capsys):
        assert main.main(["verify", "all"]) == 0
        assert "overall: PASS" in capsys.readouterr().out
