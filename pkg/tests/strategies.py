"""Hypothesis strategies and independent checkers shared by the tests."""
from __future__ import annotations

import itertools
from functools import lru_cache

from hypothesis import strategies as st

from nfccg.categories import Atom, Dir, Slash, apply_kind, enumerate_rules
from nfccg.chart import Leaf, Node

ATOMS = [Atom(a) for a in ("A", "B", "C", "D")]

dirs = st.sampled_from([Dir.FWD, Dir.BWD])


def categories(max_depth: int = 3, atoms=ATOMS):
    base = st.sampled_from(atoms)
    return st.recursive(
        base,
        lambda inner: st.builds(Slash, inner, dirs, inner),
        max_leaves=2 ** max_depth,
    ).filter(lambda c: c.depth <= max_depth)


def brute_force_trees(leaf_cats, words=None, substitution=False, max_degree=None):
    """Every tree over the leaf sequence, by enumerating bracketings.

    Shares nothing with the CKY chart: recursion over split points with
    rule matching at each node.
    """
    leaf_cats = tuple(leaf_cats)
    words = tuple(words) if words is not None else tuple(str(c) for c in leaf_cats)

    @lru_cache(maxsize=None)
    def go(i, j):
        if j - i == 1:
            return (Leaf(i, words[i], leaf_cats[i]),)
        out = []
        for k in range(i + 1, j):
            for lt, rt in itertools.product(go(i, k), go(k, j)):
                for r in enumerate_rules(lt.category, rt.category, max_degree, substitution):
                    out.append(Node(r, lt, rt))
        return tuple(out)

    return list(go(0, len(leaf_cats)))


def template_output(kind, left, right):
    return apply_kind(kind, left, right)
