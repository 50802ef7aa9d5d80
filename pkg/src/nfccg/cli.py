"""Command-line front end.

Exit status: 0 if at least one parse has the target category, 1 if none
(or a word is unknown), 2 on usage or configuration errors.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .canonical import PREFERENCES, parse_canonical
from .categories import Atom, CategorySyntaxError, parse_category
from .chart import TooManyParses, UnknownWord, parse_exhaustive, parse_nf, recipe_classes, render_tree
from .demos import DEMOS, demo
from .grammar import Grammar, LexEntry, LexiconError, PolicyError, RulePolicy, load_lexicon, load_policy
from .semantics import group_into_classes, normal_recipe, render

SECTIONS = ("trees", "recipes", "counts", "classes")


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    lexicon: Optional[str] = None
    policy: Optional[str] = None
    mode: str = "all"
    show: tuple[str, ...] = ("counts",)
    target: Optional[str] = None
    cap: int = 1_000_000
    prefer: str = "first"
    verbose: bool = False

    def validate(self) -> None:
        if self.mode not in ("all", "nf", "canonical"):
            raise ConfigError(f"unknown mode {self.mode!r}")
        bad = [s for s in self.show if s not in SECTIONS]
        if bad:
            raise ConfigError(f"unknown --show section(s): {', '.join(bad)}")
        if self.cap < 1:
            raise ConfigError("--cap must be >= 1")
        if self.prefer not in PREFERENCES:
            raise ConfigError(f"unknown preference {self.prefer!r}")


@dataclass
class Report:
    code: int
    out: list[str] = field(default_factory=list)
    err: list[str] = field(default_factory=list)

    @property
    def text(self) -> str:
        return "".join(line + "\n" for line in self.out)


def build_grammar(config: RunConfig, sentence: Sequence[str]) -> tuple[Grammar, list[str]]:
    """Load lexicon and policy; unknown category-like tokens become pseudo-words."""
    entries: list[LexEntry] = []
    if config.lexicon is not None:
        try:
            with open(config.lexicon, encoding="utf-8") as fh:
                entries = load_lexicon(fh)
        except OSError as e:
            raise ConfigError(f"cannot read lexicon: {e}") from None
        except LexiconError as e:
            raise ConfigError(f"{config.lexicon}: {e}") from None
    known = {e.word for e in entries}
    notes = []
    for tok in dict.fromkeys(sentence):
        if tok in known:
            continue
        # with a lexicon loaded, only slashed tokens count as pseudo-words
        if config.lexicon is not None and "/" not in tok and "\\" not in tok:
            continue
        try:
            c = parse_category(tok)
        except (CategorySyntaxError, ValueError):
            continue
        entries.append(LexEntry(tok, c))
        notes.append(f"note: pseudo-word {tok!r} read as category {c}")

    target = None
    policy = RulePolicy.pure()
    if config.policy is not None:
        try:
            with open(config.policy, encoding="utf-8") as fh:
                policy, target = load_policy(fh)
        except OSError as e:
            raise ConfigError(f"cannot read policy: {e}") from None
        except PolicyError as e:
            raise ConfigError(f"{config.policy}: {e}") from None
    if config.target is not None:
        try:
            target = parse_category(config.target)
        except CategorySyntaxError as e:
            raise ConfigError(f"bad --target: {e}") from None
    if config.mode == "canonical" and policy.enable_substitution:
        raise ConfigError("canonical mode cannot be used with enable_substitution")
    g = Grammar.from_entries(entries, policy, target if target is not None else Atom("S"))
    return g, notes


def run(config: RunConfig, sentence: Sequence[str]) -> Report:
    rep = Report(0)
    try:
        config.validate()
        if not sentence:
            raise ConfigError("empty sentence")
        g, notes = build_grammar(config, sentence)
    except ConfigError as e:
        rep.code = 2
        rep.err.append(f"error: {e}")
        return rep
    rep.err.extend(notes)
    words = list(sentence)
    target = g.target
    out = rep.out
    out.append(f"mode: {config.mode}")
    out.append(f"target: {target}")
    try:
        if config.mode == "canonical":
            chart = parse_canonical(words, g, config.prefer)
            trees = chart.parses()
            n_parses = len(trees)
            sizes = [chart.key_of(t).candidates for t in trees]
            if config.verbose:
                for (s, e), cell in sorted(chart.cells.items(), key=lambda kv: (kv[0][1] - kv[0][0], kv[0][0])):
                    for t, ref in cell.values():
                        out.append(f"cell [{s},{e}] #{ref.seqno} {t.category} seen={ref.candidates} {render_tree(t)}")
        else:
            chart = parse_exhaustive(words, g) if config.mode == "all" else parse_nf(words, g)
            n_parses = chart.count(target)
            classes = recipe_classes(chart, target)
            sizes = list(classes.values())
            trees = None
            if n_parses and any(s in config.show for s in ("trees", "recipes", "classes")):
                trees = chart.trees(target, cap=config.cap)
            if config.verbose and config.mode == "nf":
                for b in chart.blocked:
                    out.append(f"blocked {b}")
    except UnknownWord as e:
        rep.code = 1
        rep.err.append(f"error: {e}")
        return rep
    except TooManyParses as e:
        rep.code = 2
        rep.err.append(f"error: {e}; raise --cap or drop trees/recipes/classes from --show")
        return rep

    if "counts" in config.show:
        label = {"all": "total", "nf": "nf", "canonical": "canonical"}[config.mode]
        out.append(f"{label}={n_parses}")
        out.append(f"classes={len(sizes)}")
        out.append("class_sizes=" + ",".join(str(s) for s in sizes))
    if "trees" in config.show and trees:
        for t in trees:
            out.append(f"tree {render_tree(t, config.verbose)}")
    if "recipes" in config.show and trees:
        for t in trees:
            out.append(f"recipe {render(normal_recipe(t), words)}")
    if "classes" in config.show and trees:
        if config.mode == "canonical":
            groups = [[t] for t in trees]
        else:
            groups = group_into_classes(trees)
        for i, grp in enumerate(groups, 1):
            size = sizes[i - 1] if config.mode == "canonical" else len(grp)
            out.append(f"class {i} size={size} {render_tree(grp[0])}")
            out.append(f"  recipe {render(normal_recipe(grp[0]), words)}")
    rep.code = 0 if n_parses else 1
    return rep


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nfccg", description="Normal-form CCG parser.")
    p.add_argument("sentence", nargs="*", help="whitespace-separated words")
    p.add_argument("--lexicon", metavar="PATH")
    p.add_argument("--policy", metavar="PATH")
    p.add_argument("--mode", choices=("all", "nf", "canonical"), default="all")
    p.add_argument("--show", default="counts", help="comma list of " + ",".join(SECTIONS))
    p.add_argument("--target", metavar="CAT")
    p.add_argument("--cap", type=int, default=1_000_000)
    p.add_argument("--prefer", choices=sorted(PREFERENCES), default="first")
    p.add_argument("--demo", metavar="NAME", help="one of: " + ", ".join(DEMOS))
    p.add_argument("--n", type=int, help="size parameter for the modifiers/chain demos")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0) and 2
    if args.demo is not None:
        try:
            report = demo(args.demo, args.n)
        except (KeyError, ValueError) as e:
            print(f"error: {e.args[0]}", file=sys.stderr)
            return 2
        sys.stdout.write(report.text())
        return 0 if report.ok else 1
    words = [w for chunk in args.sentence for w in chunk.split()]
    config = RunConfig(
        lexicon=args.lexicon,
        policy=args.policy,
        mode=args.mode,
        show=tuple(s.strip() for s in args.show.split(",") if s.strip()),
        target=args.target,
        cap=args.cap,
        prefer=args.prefer,
        verbose=args.verbose,
    )
    rep = run(config, words)
    sys.stdout.write(rep.text)
    for line in rep.err:
        print(line, file=sys.stderr)
    return rep.code


if __name__ == "__main__":
    sys.exit(main())
