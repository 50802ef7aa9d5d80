import subprocess
import sys
from pathlib import Path

import pytest

from nfccg.cli import RunConfig, main, run
from nfccg.demos import DEMOS, GALOOT_SENTENCE, JOHN_SENTENCE, demo

DATA = Path(__file__).resolve().parent.parent / "data"
JOHN = str(DATA / "john.lex")
GALOOT = str(DATA / "galoot.lex")


def lines(rep):
    return rep.text.splitlines()


def test_john_counts():
    rep = run(RunConfig(lexicon=JOHN), JOHN_SENTENCE)
    assert rep.code == 0
    assert lines(rep) == ["mode: all", "target: S", "total=2", "classes=1", "class_sizes=2"]


def test_john_nf_trees_and_blocked():
    rep = run(RunConfig(lexicon=JOHN, mode="nf", show=("counts", "trees", "recipes"), verbose=True), JOHN_SENTENCE)
    out = lines(rep)
    assert "nf=1" in out
    assert r"tree [[John] [[likes] [Mary]]S\NP-OT]S-OT" in out
    assert "recipe john_0(likes_1(mary_2))" in out
    assert "blocked [0,2,3] S/NP-FC1 + NP-OT -> S [>B0]" in out


def test_galoot_modes():
    policy = str(DATA / "galoot.policy")
    all_ = lines(run(RunConfig(lexicon=GALOOT, policy=policy), GALOOT_SENTENCE))
    assert "total=252" in all_ and "classes=2" in all_
    assert sorted(all_[-1].split("=")[1].split(",")) == ["168", "84"]
    assert "nf=2" in lines(run(RunConfig(lexicon=GALOOT, policy=policy, mode="nf"), GALOOT_SENTENCE))
    can = run(RunConfig(lexicon=GALOOT, policy=policy, mode="canonical", show=("counts", "classes")), GALOOT_SENTENCE)
    assert "canonical=2" in lines(can)
    assert sum(l.startswith("class ") for l in lines(can)) == 2


def test_pseudo_words_without_lexicon():
    rep = run(RunConfig(target="A", show=("counts", "classes")), ["A/B", "B/C", "C"])
    assert rep.code == 0 and "total=2" in lines(rep) and "classes=1" in lines(rep)
    assert any("pseudo-word" in e for e in rep.err)


def test_blocked_policy_file():
    policy = str(DATA / "blocked.policy")
    words = ["A/B", "B/C", "C"]
    assert run(RunConfig(policy=policy, mode="nf"), words).code == 1
    rep = run(RunConfig(policy=policy, mode="canonical", show=("counts", "trees")), words)
    assert rep.code == 0 and "canonical=1" in lines(rep)


def test_unknown_word_exit_1():
    rep = run(RunConfig(lexicon=JOHN), ["John", "sees", "Mary"])
    assert rep.code == 1 and "sees" in rep.err[0]


def test_no_parse_exit_1():
    rep = run(RunConfig(lexicon=JOHN), ["Mary", "likes", "John"])
    assert rep.code == 1 and "total=0" in lines(rep)


@pytest.mark.parametrize(
    "config",
    [
        RunConfig(mode="fast"),
        RunConfig(show=("pictures",)),
        RunConfig(cap=0),
        RunConfig(prefer="random"),
        RunConfig(lexicon="/nonexistent.lex"),
        RunConfig(target="S/("),
    ],
)
def test_config_errors_exit_2(config):
    rep = run(config, ["A"])
    assert rep.code == 2 and rep.err[0].startswith("error:")


def test_malformed_lexicon_exit_2(tmp_path):
    p = tmp_path / "bad.lex"
    p.write_text("a\tS/(NP\n")
    rep = run(RunConfig(lexicon=str(p)), ["a"])
    assert rep.code == 2 and "line 1" in rep.err[0]


def test_cap_exit_2():
    words = ["A1/A2", "A2/A3", "A3/A4", "A4/A5", "A5"]
    rep = run(RunConfig(target="A1", show=("trees",), cap=3), words)
    assert rep.code == 2 and "--cap" in rep.err[-1]
    assert run(RunConfig(target="A1", cap=3), words).code == 0


def test_empty_sentence():
    assert run(RunConfig(), []).code == 2


@pytest.mark.parametrize("name", sorted(DEMOS))
def test_demos_pass(name):
    rep = demo(name)
    assert rep.ok, rep.text()


def test_main_demo_and_usage(capsys):
    assert main(["--demo", "john"]) == 0
    assert "demo: john" in capsys.readouterr().out
    assert main(["--demo", "nope"]) == 2
    assert main(["--demo", "modifiers", "--n", "9"]) == 2
    assert main(["--mode", "bogus", "x"]) == 2


def test_main_sentence(capsys):
    assert main(["--lexicon", JOHN, "--mode", "nf", "John likes Mary"]) == 0
    assert "nf=1" in capsys.readouterr().out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "nfccg", "--lexicon", JOHN, "John", "likes", "Mary"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and "total=2" in proc.stdout
