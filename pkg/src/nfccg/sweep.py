"""Randomized safety/completeness sweep over generated lexicons.

Each instance is checked for:

``a``  NF parses are pairwise inequivalent
``b``  exhaustive and NF charts have the same semantic classes
``c``  nf_rewrite is idempotent, meaning-preserving and yields NF trees
``d``  NF-key equality induces the same partition as recipe equality
``e``  the canonicalizing parser keeps one tree per class under random blocking

``c``-``e`` only look at composition trees; canonical mode needs a
composition-only grammar, so ``e`` runs on instances without substitution.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field

from .canonical import PREFERENCES, NFTable, nf_tag_ok, parse_canonical
from .chart import is_normal_form, iter_nodes, leaves, parse_exhaustive, parse_nf, recipe_classes
from .grammar import BlockPattern, RulePolicy
from .randgen import random_sentence
from .semantics import normal_recipe


@dataclass
class SweepConfig:
    instances: int = 500
    seed: int = 0
    min_words: int = 3
    max_words: int = 7
    n_atoms: int = 4
    max_depth: int = 3
    max_cats: int = 3
    substitution: bool = False
    block_prob: float = 0.3
    tree_cap: int = 200_000


@dataclass
class SweepResult:
    config: SweepConfig
    violations: dict[str, list[str]] = field(default_factory=lambda: {k: [] for k in "abcde"})
    checked: Counter = field(default_factory=Counter)
    ambiguous: int = 0

    @property
    def ok(self) -> bool:
        return not any(self.violations.values())

    def summary(self) -> str:
        parts = [f"{k}:{len(v)}" for k, v in self.violations.items()]
        return (
            f"instances={self.config.instances} substitution={self.config.substitution} "
            f"ambiguous={self.ambiguous} trees={self.checked['trees']} violations " + " ".join(parts)
        )


def class_key(t):
    return t.category, tuple(l.category for l in leaves(t)), normal_recipe(t)


def _has_substitution(t) -> bool:
    return any(n.rule.kind.substitution for n in iter_nodes(t))


def check_instance(rs, rng: random.Random, res: SweepResult, label: str, block_prob: float, tree_cap: int) -> None:
    g = rs.grammar
    E = parse_exhaustive(rs.words, g)
    N = parse_nf(rs.words, g)
    ce, cn = recipe_classes(E), recipe_classes(N)
    if E.count(g.target) > len(recipe_classes(E, g.target)):
        res.ambiguous += 1

    # a
    dup = [k for k, v in cn.items() if v > 1]
    if dup:
        res.violations["a"].append(f"{label}: {len(dup)} classes with several NF parses")
    # b
    if set(ce) != set(cn):
        res.violations["b"].append(f"{label}: {len(set(ce) ^ set(cn))} classes differ")

    # c, d
    trees = [t for t in E.trees(cap=tree_cap) if not _has_substitution(t)]
    res.checked["trees"] += len(trees)
    table = NFTable()
    by_ref: dict[int, set] = {}
    by_key: dict[tuple, set] = {}
    for i, t in enumerate(trees):
        ref = table.nf(t)
        n = ref.tree
        if table.nf(n) is not ref or n.category != t.category:
            res.violations["c"].append(f"{label}: rewrite not idempotent")
        if not (is_normal_form(n) and nf_tag_ok(n)):
            res.violations["c"].append(f"{label}: rewrite output not in normal form")
        key = class_key(t)
        if normal_recipe(n) != key[2]:
            res.violations["c"].append(f"{label}: rewrite changed the recipe")
        by_ref.setdefault(ref.seqno, set()).add(i)
        by_key.setdefault(key, set()).add(i)
    if sorted(map(sorted, by_ref.values())) != sorted(map(sorted, by_key.values())):
        res.violations["d"].append(f"{label}: NF-key partition differs from recipe partition")

    # e
    if g.policy.enable_substitution:
        return
    used = sorted({r for cell in E.cells.values() for it in cell.values() for r, _, _ in it.derivations}, key=str)
    blocked = [BlockPattern(r.left, r.right, r.kind, r.output) for r in used if rng.random() < block_prob]
    gb = g.with_policy(RulePolicy(g.policy.max_degree, g.policy.allow_crossing, False).block(*blocked))
    prefer = rng.choice(sorted(PREFERENCES))
    C = parse_canonical(rs.words, gb, prefer)
    Eb = parse_exhaustive(rs.words, gb)
    for (s, e) in Eb.cells:
        got = [class_key(t) for t in C.trees(span=(s, e))]
        want = {(c, cats, r) for (c, cats, r) in recipe_classes(Eb, span=(s, e))}
        if len(got) != len(set(got)) or set(got) != want:
            res.violations["e"].append(f"{label}: span [{s},{e}] has {len(got)} reps for {len(want)} classes")
            break


def run_sweep(config: SweepConfig) -> SweepResult:
    rng = random.Random(config.seed)
    res = SweepResult(config)
    for i in range(config.instances):
        n = rng.randint(config.min_words, config.max_words)
        rs = random_sentence(
            rng, n, config.n_atoms, config.max_depth, config.max_cats, substitution=config.substitution
        )
        check_instance(rs, rng, res, f"#{i}", config.block_prob, config.tree_cap)
    return res
