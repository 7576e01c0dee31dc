import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from brauer_ade.cli import run

GOLDEN = Path(__file__).parent / "golden"

CASES = {
    "roots_A2": ["roots", "A2"],
    "orbits_D4": ["orbits", "D4"],
    "poset_A3_orbit2": ["poset", "A3", "--orbit", "2"],
    "poset_D4_orbit1_dot": ["poset", "D4", "--orbit", "1", "--dot"],
    "closure_D4": ["closure", "D4", "--set", "1,2,4"],
    "closure_A3_roots": ["closure", "A3", "--roots", "1,0,0;0,0,1"],
    "act_D4": ["act", "D4", "--set", "1,2", "--word", "E3 R3"],
    "relations_D4": ["relations", "D4"],
    "relations_strands4": ["relations", "--strands", "4"],
    "morita_A3": ["morita", "A3"],
    "morita_E6_bmw": ["morita", "E6", "--bmw"],
    "wedderburn_A3": ["wedderburn", "A3"],
    "gram_3_1": ["gram", "--strands", "3", "--arcs", "1"],
    "semisimple_3_1": ["semisimple", "--strands", "3", "--delta", "1"],
    "semisimple_4_half": ["semisimple", "--strands", "4", "--delta", "1/2"],
    "dnss_4_1": ["dnss", "4", "--delta", "1"],
    "dnss_4_4_char5": ["dnss", "4", "--delta", "4", "--char", "5"],
    "zset_3": ["zset", "3"],
    "cellposet_d4": ["cellposet-d", "4"],
    "cellposet_d4_dot": ["cellposet-d", "4", "--dot"],
}


def _path(name, out):
    return GOLDEN / (name + (".dot" if out.startswith("digraph") else ".json"))


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name):
    code, out, err = run(CASES[name])
    assert code == 0, err
    path = _path(name, out)
    if os.environ.get("REGENERATE_GOLDEN"):
        path.write_text(out, encoding="utf-8")
    assert out == path.read_text(encoding="utf-8")
    if path.suffix == ".json":
        json.loads(out)


def test_every_subcommand_has_a_golden_file():
    from brauer_ade.cli import COMMANDS

    covered = {argv[0] for argv in CASES.values()}
    assert covered == set(COMMANDS)


def test_selected_values():
    assert json.loads(run(["roots", "A2"])[1])["count"] == 3
    assert json.loads(run(["zset", "3"])[1])["zset"] == [-2, 0, 1]
    gram = json.loads(run(["gram", "--strands", "3", "--arcs", "1"])[1])
    assert gram["det"]["text"] == "2 - 3δ + δ^3" and gram["rational_roots"] == ["-2", "1"]


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["roots", "Q3"],
        ["roots"],
        ["poset", "A3", "--orbit", "9"],
        ["closure", "D4", "--set", "1,3"],
        ["act", "D4", "--set", "1,2,4", "--word", "E1"],
        ["act", "A2", "--word", "X1"],
        ["gram", "--strands", "3", "--arcs", "5"],
        ["gram", "--strands", "9", "--arcs", "1"],
        ["semisimple", "--strands", "3", "--delta", "a/b"],
        ["dnss", "4", "--delta", "1", "--char", "6"],
        ["cellposet-d", "3"],
        ["orbits", "E8"],
        ["orbits", "A2", "--json", "--dot"],
    ],
)
def test_parse_errors_exit_1(argv):
    code, out, err = run(argv)
    assert code == 1 and out == "" and err.startswith("error:")


def test_invariant_violation_exit_2(monkeypatch):
    from brauer_ade import cli
    from brauer_ade.errors import InvariantViolation

    def boom(args):
        raise InvariantViolation("forced")

    monkeypatch.setitem(cli.COMMANDS, "zset", boom)
    code, out, err = run(["zset", "3"])
    assert code == 2 and "forced" in err


def test_subprocess_byte_identical():
    cmd = [sys.executable, "-m", "brauer_ade", "orbits", "D5"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b
    bad = subprocess.run([sys.executable, "-m", "brauer_ade", "roots", "Z1"], capture_output=True)
    assert bad.returncode == 1
