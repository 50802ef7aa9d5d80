"""Random lexicons that are guaranteed to parse, for property testing.

A sentence is grown top-down from a goal category by running random rule
templates backwards, so at least one derivation always exists.  Extra
distractor categories are then added to each word.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .categories import Atom, Category, Dir, Slash, attach, peel
from .grammar import Grammar, LexEntry, RulePolicy


@dataclass
class RandomSentence:
    words: list[str]
    grammar: Grammar
    goal: Category


def random_category(rng: random.Random, atoms: list[Atom], depth: int) -> Category:
    if depth <= 0 or rng.random() < 0.45:
        return rng.choice(atoms)
    d = rng.choice((Dir.FWD, Dir.BWD))
    return Slash(random_category(rng, atoms, depth - 1), d, random_category(rng, atoms, depth - 1))


def _split(rng, c: Category, atoms, max_depth: int, substitution: bool) -> Optional[tuple[Category, Category]]:
    options = ["fwd", "bwd"]
    if substitution and c.arity >= 1:
        options += ["sfwd", "sbwd"]
    how = rng.choice(options)
    y = random_category(rng, atoms, 1)
    if how in ("fwd", "bwd"):
        n = rng.randint(0, min(c.arity, 2))
        core, stripped = peel(c, n)
        if how == "fwd":
            return Slash(core, Dir.FWD, y), attach(y, stripped)
        return attach(y, stripped), Slash(core, Dir.BWD, y)
    # c = x|z
    x, d, z = c.result, c.dir, c.arg
    if how == "sfwd":
        return Slash(Slash(x, Dir.FWD, y), d, z), Slash(y, d, z)
    return Slash(y, d, z), Slash(Slash(x, Dir.BWD, y), d, z)


def _grow(rng, c, k, atoms, max_depth, substitution) -> Optional[list[Category]]:
    if k == 1:
        return [c] if c.depth <= max_depth else None
    for _ in range(8):
        pair = _split(rng, c, atoms, max_depth, substitution)
        if pair is None or pair[0].depth > max_depth or pair[1].depth > max_depth:
            continue
        kl = rng.randint(1, k - 1)
        left = _grow(rng, pair[0], kl, atoms, max_depth, substitution)
        if left is None:
            continue
        right = _grow(rng, pair[1], k - kl, atoms, max_depth, substitution)
        if right is None:
            continue
        return left + right
    return None


def random_sentence(
    rng: random.Random,
    n_words: int,
    n_atoms: int = 4,
    max_depth: int = 3,
    max_cats: int = 3,
    substitution: bool = False,
    policy: Optional[RulePolicy] = None,
) -> RandomSentence:
    """A random lexicon plus a sentence it can parse with category ``goal``."""
    atoms = [Atom(a) for a in "ABCD"[:n_atoms]]
    while True:
        goal = random_category(rng, atoms, 1)
        cats = _grow(rng, goal, n_words, atoms, max_depth, substitution)
        if cats is not None:
            break
    words = [f"w{i}" for i in range(n_words)]
    pool = list(dict.fromkeys(cats))
    entries = []
    for w, c in zip(words, cats):
        mine = [c]
        for _ in range(rng.randint(0, max_cats - 1)):
            extra = rng.choice(pool) if rng.random() < 0.6 else random_category(rng, atoms, 2)
            if extra not in mine and extra.depth <= max_depth:
                mine.append(extra)
        entries.extend(LexEntry(w, m) for m in mine)
    if policy is None:
        policy = RulePolicy.pure(substitution)
    return RandomSentence(words, Grammar.from_entries(entries, policy, goal), goal)
