import json
import subprocess
import sys

import pytest

PKG = [sys.executable, "-m", "cleantri.cli"]


def run(*args):
    return subprocess.run(
        PKG + list(args), capture_output=True, text=True, timeout=300
    )


class TestImphCommand:
    def test_single(self):
        r = run("imph", "49")
        assert r.returncode == 0
        assert "35" in r.stdout

    def test_bfile(self):
        r = run("imph", "1..10", "--bfile")
        assert r.returncode == 0
        assert r.stdout.splitlines() == [
            "1 1", "2 0", "3 1", "4 0", "5 3", "6 0", "7 5", "8 0", "9 3", "10 0",
        ]

    def test_bfile_roundtrip(self):
        r = run("imph", "1..50", "--bfile")
        pairs = [line.split() for line in r.stdout.splitlines()]
        assert all(len(p) == 2 for p in pairs)
        indices = [int(p[0]) for p in pairs]
        assert indices == list(range(1, 51))
        assert not any(line != line.rstrip() for line in r.stdout.splitlines())

    def test_bruteforce_flag(self):
        r = run("imph", "15", "--bruteforce")
        assert r.returncode == 0
        assert "3" in r.stdout

    def test_usage_error(self):
        assert run("imph", "0").returncode == 2
        assert run("imph", "abc").returncode == 2

    def test_json(self):
        r = run("imph", "49", "--json")
        rec = json.loads(r.stdout)
        assert rec["command"] == "imph"
        assert rec["results"]["49"] == 35
        assert rec["provenance"] == "closed-form"


class TestTcountCommand:
    def test_all_methods(self):
        r = run("tcount", "7", "--method", "all")
        assert r.returncode == 0
        assert "closed=2" in r.stdout
        assert "burnside=2" in r.stdout
        assert "geometric=2" in r.stdout

    def test_even(self):
        r = run("tcount", "6")
        assert r.returncode == 0
        assert "0" in r.stdout

    def test_bfile(self):
        r = run("tcount", "1..99", "--bfile")
        assert r.returncode == 0
        lines = r.stdout.splitlines()
        assert len(lines) == 99
        assert lines[0] == "1 1"
        assert lines[6] == "7 2"
        assert all(line.split()[1] == "0" for line in lines[1::2])


class TestReduceCommand:
    def test_figure1(self):
        r = run("reduce", "0", "0", "-3", "-3", "2", "4")
        assert r.returncode == 0
        assert "b=3 m=0 h=2" in r.stdout
        assert "witness" in r.stdout

    def test_identity(self):
        r = run("reduce", "0", "0", "1", "0", "3", "5")
        assert "b=1 m=3 h=5" in r.stdout

    def test_degenerate(self):
        r = run("reduce", "0", "0", "1", "1", "2", "2")
        assert r.returncode == 2


class TestEquivCommand:
    def test_equivalent(self):
        r = run("equiv", "0", "0", "1", "0", "2", "7", "0", "0", "1", "0", "4", "7")
        assert r.returncode == 0
        assert "equivalent: yes" in r.stdout

    def test_not_equivalent(self):
        r = run("equiv", "0", "0", "1", "0", "3", "7", "0", "0", "1", "0", "2", "7")
        assert r.returncode == 0
        assert "equivalent: no" in r.stdout

    def test_rejects_non_clean(self):
        r = run("equiv", "0", "0", "-3", "-3", "2", "4", "0", "0", "3", "0", "2", "2")
        assert r.returncode == 2


class TestScottCommand:
    def test_equality_triangle(self):
        r = run("scott", "1", "1", "1", "4", "4", "1")
        assert r.returncode == 0
        assert "equality" in r.stdout
        assert "I=1 B=9" in r.stdout

    def test_scan(self):
        r = run("scott", "--scan", "4")
        assert r.returncode == 0
        assert "violations: 0" in r.stdout

    def test_not_applicable(self):
        r = run("scott", "0", "0", "1", "0", "0", "1")
        assert r.returncode == 0
        assert "not applicable" in r.stdout


class TestOrbitsCommand:
    def test_orbits(self):
        r = run("orbits", "7")
        assert r.returncode == 0
        assert "2 orbit(s)" in r.stdout
        assert "{2, 4, 6}" in r.stdout


class TestMeanvalueCommand:
    def test_small(self):
        r = run("meanvalue", "--x", "10", "--primes", "1000")
        assert r.returncode == 0
        assert "0.13" in r.stdout
        assert "small x" in r.stdout

    def test_usage(self):
        assert run("meanvalue", "--x", "0").returncode == 2


class TestDeterminism:
    @pytest.mark.parametrize(
        "args",
        [
            ("imph", "1..30", "--bfile"),
            ("tcount", "1..31", "--method", "all", "--json"),
            ("reduce", "0", "0", "-3", "-3", "2", "4", "--json"),
            ("orbits", "105", "--json"),
            ("meanvalue", "--x", "1000", "--primes", "10000", "--json"),
        ],
    )
    def test_repeat_runs_identical(self, args):
        a, b = run(*args), run(*args)
        assert a.returncode == b.returncode == 0
        assert a.stdout == b.stdout
