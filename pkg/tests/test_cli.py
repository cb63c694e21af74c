import json
import subprocess
import sys

import pytest

from fza.cli import main
from fza.io_format import parse_automaton, serialize_automaton
from fza.oracle import nfa_run_degree_oracle

from helpers import FIXTURES, fixture_text, strings

NFA_FILE = str(FIXTURES / "sample_nfa.fza.json")
ENFA_FILE = str(FIXTURES / "sample_enfa.fza.json")
DFA_FILE = str(FIXTURES / "sample_dfa.fza.json")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_validate(capsys):
    assert run(capsys, "validate", NFA_FILE) == (0, "ok: nfa, |Q|=5, |Σ|=2\n", "")


def test_validate_unknown_state(capsys, tmp_path):
    doc = json.loads(fixture_text("sample_nfa"))
    doc["transitions"][0]["dist"]["q9"] = "0.3"
    bad = tmp_path / "bad.fza.json"
    bad.write_text(json.dumps(doc))
    code, out, err = run(capsys, "validate", str(bad))
    assert code == 2 and out == "" and "q9" in err


def test_validate_empty_file(capsys, tmp_path):
    empty = tmp_path / "empty.fza.json"
    empty.write_text("")
    code, _, err = run(capsys, "validate", str(empty))
    assert code == 2 and "1:1" in err


def test_validate_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "validate", str(tmp_path / "nope.fza.json"))
    assert code == 2 and "nope" in err


@pytest.mark.parametrize(
    "argv, expected",
    [
        ((NFA_FILE, "--input", "a b"), "0.7\n"),
        ((ENFA_FILE, "--empty"), "0.5\n"),
        ((ENFA_FILE, "--input", "b"), "0\n"),
        ((ENFA_FILE, "--input", "a", "--oracle"), "0.8\n"),
        ((DFA_FILE, "--input", "a  b", "--oracle"), "0.7\n"),
    ],
)
def test_eval(capsys, argv, expected):
    assert run(capsys, "eval", *argv) == (0, expected, "")


def test_eval_json(capsys):
    code, out, _ = run(capsys, "eval", NFA_FILE, "--input", "a a", "--format", "json")
    assert code == 0 and json.loads(out) == {"string": ["a", "a"], "degree": "0.2"}


def test_eval_unknown_token(capsys):
    code, out, err = run(capsys, "eval", NFA_FILE, "--input", "a z")
    assert code == 2 and out == "" and "'z'" in err


def test_eval_needs_input_or_empty(capsys):
    with pytest.raises(SystemExit) as info:
        main(["eval", NFA_FILE])
    assert info.value.code == 2
    code, _, err = run(capsys, "eval", NFA_FILE, "--input", "  ")
    assert code == 2 and "--empty" in err


def test_determinize_matches_fixture(capsys, tmp_path):
    out = tmp_path / "d.fza.json"
    assert run(capsys, "determinize", NFA_FILE, "-o", str(out))[0] == 0
    assert out.read_bytes() == (FIXTURES / "sample_dfa.fza.json").read_bytes()


def test_rm_epsilon_matches_fixture(capsys):
    code, out, _ = run(capsys, "rm-epsilon", ENFA_FILE)
    assert code == 0 and out == fixture_text("sample_eps_free")


def test_rm_epsilon_prune(capsys):
    code, out, _ = run(capsys, "rm-epsilon", ENFA_FILE, "--prune")
    pruned = parse_automaton(out)
    assert code == 0
    assert len(pruned.delta[("q0", "a")]) == 3 and len(pruned.delta[("q1", "b")]) == 2


@pytest.mark.parametrize("cmd, path", [("determinize", DFA_FILE), ("determinize", ENFA_FILE), ("rm-epsilon", NFA_FILE), ("compile", DFA_FILE)])
def test_kind_mismatch(capsys, cmd, path):
    code, out, err = run(capsys, cmd, path)
    assert code == 2 and out == "" and "expects" in err


def test_compile_and_equiv(capsys, tmp_path):
    out = tmp_path / "c.fza.json"
    assert run(capsys, "compile", ENFA_FILE, "-o", str(out))[0] == 0
    assert parse_automaton(out.read_text()).kind == "dfa"
    assert run(capsys, "equiv", ENFA_FILE, str(out), "--max-len", "4") == (0, "equivalent up to 4\n", "")


def test_equiv_determinization(capsys):
    assert run(capsys, "equiv", NFA_FILE, DFA_FILE, "--max-len", "5")[0] == 0


def test_equiv_counterexample(capsys, tmp_path):
    doc = json.loads(fixture_text("sample_nfa"))
    for rec in doc["transitions"]:
        if rec["from"] == "q2":
            rec["dist"] = {"q4": "0.6"}
    altered = tmp_path / "alt.fza.json"
    altered.write_text(json.dumps(doc))
    a, b = parse_automaton(fixture_text("sample_nfa")), parse_automaton(altered.read_text())
    least = next(s for s in strings("ab", 3) if nfa_run_degree_oracle(a, s) != nfa_run_degree_oracle(b, s))
    code, out, _ = run(capsys, "equiv", NFA_FILE, str(altered), "--max-len", "3")
    assert code == 1
    assert out == f"not equivalent: {' '.join(least)}\t0.5\t0.6\n"
    code, out, _ = run(capsys, "equiv", NFA_FILE, str(altered), "--max-len", "3", "--format", "json")
    assert json.loads(out)["counterexample"] == {"string": list(least), "degree_a": "0.5", "degree_b": "0.6"}


def test_equiv_alphabet_mismatch(capsys, tmp_path):
    doc = json.loads(fixture_text("sample_nfa"))
    doc["alphabet"] = ["a", "b", "c"]
    other = tmp_path / "o.fza.json"
    other.write_text(json.dumps(doc))
    code, _, err = run(capsys, "equiv", NFA_FILE, str(other), "--max-len", "2")
    assert code == 2 and "alphabet" in err


def test_language_nonzero(capsys):
    code, out, _ = run(capsys, "language", NFA_FILE, "--max-len", "2", "--nonzero")
    assert code == 0
    assert out.splitlines() == ["a\t0.2", "a a\t0.2", "a b\t0.7"]


def test_language_sample_enfa(capsys):
    _, out, _ = run(capsys, "language", ENFA_FILE, "--max-len", "1", "--nonzero")
    assert out.splitlines() == ["ε\t0.5", "a\t0.8"]
    _, out, _ = run(capsys, "language", ENFA_FILE, "--max-len", "1", "--nonzero", "--ascii")
    assert out.splitlines()[0] == "<eps>\t0.5"


def test_language_zero_length(capsys):
    _, out, _ = run(capsys, "language", NFA_FILE, "--max-len", "0")
    assert out == "ε\t0\n"


def test_language_json_and_oracle(capsys):
    _, plain, _ = run(capsys, "language", ENFA_FILE, "--max-len", "2", "--format", "json")
    _, checked, _ = run(capsys, "language", ENFA_FILE, "--max-len", "2", "--format", "json", "--oracle")
    rows = json.loads(plain)
    assert rows == json.loads(checked) and len(rows) == 7
    assert rows[0] == {"string": [], "degree": "0.5"}


def test_language_resource_limit(capsys):
    code, _, err = run(capsys, "language", NFA_FILE, "--max-len", "40")
    assert code == 2 and "limit" in err


def test_output_is_deterministic(capsys):
    first = run(capsys, "rm-epsilon", ENFA_FILE)[1]
    assert run(capsys, "rm-epsilon", ENFA_FILE)[1] == first == serialize_automaton(parse_automaton(first))


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "fza", "eval", NFA_FILE, "--input", "a b"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout == "0.7\n"
