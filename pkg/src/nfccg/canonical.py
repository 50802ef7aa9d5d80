"""Normal-form rewriting and the canonicalizing parser for restricted grammars.

:class:`NFTable` hash-conses normal-form trees: every distinct NF tree gets
one :class:`NFRef` with a sequence number, so NF equality is a number
comparison and the NF of a new constituent is found from its children's
NFs with a memo lookup.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .categories import Category, Dir, RuleKind, enumerate_rules, instantiate
from .chart import Leaf, Node, ParseTree, UnknownWord, iter_nodes, nf_admissible
from .grammar import Grammar

log = logging.getLogger(__name__)


class UnsupportedRule(ValueError):
    """Raised for substitution nodes, which have no rewriting defined."""


class RotationError(AssertionError):
    pass


@dataclass(eq=False)
class NFRef:
    seqno: int
    tree: ParseTree
    kind: Optional[RuleKind] = None
    left: Optional["NFRef"] = None
    right: Optional["NFRef"] = None
    currparse: Optional[ParseTree] = None
    candidates: int = 0

    @property
    def category(self) -> Category:
        return self.tree.category

    def __repr__(self) -> str:
        return f"NFRef(#{self.seqno} {self.tree.category})"


class NFTable:
    """Interned NF trees for one sentence."""

    def __init__(self):
        self.counter = 0
        self._interned: dict[tuple, NFRef] = {}
        self._combined: dict[tuple, NFRef] = {}

    def __len__(self) -> int:
        return len(self._interned)

    def _intern(self, key: tuple, build: Callable[[], ParseTree], **kw) -> NFRef:
        ref = self._interned.get(key)
        if ref is None:
            self.counter += 1
            ref = self._interned[key] = NFRef(self.counter, build(), **kw)
        return ref

    def leaf(self, leaf: Leaf) -> NFRef:
        return self._intern(("leaf", leaf.position, leaf.category), lambda: leaf)

    def _node(self, kind: RuleKind, left: NFRef, right: NFRef) -> NFRef:
        def build():
            rule = instantiate(kind, left.category, right.category)
            if rule is None:
                raise RotationError(f"{kind} cannot combine {left.category} and {right.category}")
            return Node(rule, left.tree, right.tree)

        return self._intern((kind, left.seqno, right.seqno), build, kind=kind, left=left, right=right)

    def combine(self, kind: RuleKind, b: NFRef, g: NFRef) -> NFRef:
        """NF of the tree built by ``kind`` from NF subtrees ``b`` and ``g``."""
        key = (kind, b.seqno, g.seqno)
        got = self._combined.get(key)
        if got is not None:
            return got
        if kind.substitution:
            raise UnsupportedRule(f"no normal form rewriting for substitution rule {kind}")
        fwd_bad = kind.forward and _is_composition(b.kind, Dir.FWD)
        bwd_bad = not kind.forward and _is_composition(g.kind, Dir.BWD)
        assert not (fwd_bad and bwd_bad)
        if fwd_bad:
            # <R, <Q, b1, b2>, g>  =>  <S, b1, NF<T, b2, g>>
            q = b.kind.degree
            inner = self.combine(kind, b.right, g)
            res = self._node(RuleKind.compose(Dir.FWD, kind.degree + q - 1), b.left, inner)
        elif bwd_bad:
            # <R, b, <Q, g1, g2>>  =>  <S, NF<T, b, g1>, g2>
            q = g.kind.degree
            inner = self.combine(kind, b, g.left)
            res = self._node(RuleKind.compose(Dir.BWD, kind.degree + q - 1), inner, g.right)
        else:
            res = self._node(kind, b, g)
        self._combined[key] = res
        return res

    def nf(self, t: ParseTree) -> NFRef:
        if isinstance(t, Leaf):
            return self.leaf(t)
        ref = self.combine(t.rule.kind, self.nf(t.left), self.nf(t.right))
        if ref.category != t.category:
            raise RotationError(f"rewriting changed category {t.category} to {ref.category}")
        return ref


def _is_composition(kind: Optional[RuleKind], d: Dir) -> bool:
    return kind is not None and not kind.substitution and kind.dir is d and kind.degree >= 1


def nf_rewrite(t: ParseTree, table: Optional[NFTable] = None) -> ParseTree:
    """The normal-form tree equivalent to ``t``.

    Composition-only trees; raises :class:`UnsupportedRule` on substitution.
    """
    return (table or NFTable()).nf(t).tree


def nf_key_equal(a: ParseTree, b: ParseTree, table: Optional[NFTable] = None) -> bool:
    table = table or NFTable()
    return table.nf(a) is table.nf(b)


# --- preference policies ------------------------------------------------------

PreferableTo = Callable[[ParseTree, ParseTree], bool]


def first_found(candidate: ParseTree, incumbent: ParseTree) -> bool:
    return False


def left_branching_score(t: ParseTree) -> int:
    """Internal nodes that sit on a left-child edge."""
    return sum(isinstance(n.left, Node) for n in iter_nodes(t))


def nonstandard_count(t: ParseTree) -> int:
    return sum(n.tag.name != "OT" for n in iter_nodes(t))


def more_left_branching(candidate: ParseTree, incumbent: ParseTree) -> bool:
    return left_branching_score(candidate) > left_branching_score(incumbent)


def fewer_nonstandard(candidate: ParseTree, incumbent: ParseTree) -> bool:
    return nonstandard_count(candidate) < nonstandard_count(incumbent)


PREFERENCES: dict[str, PreferableTo] = {
    "first": first_found,
    "left": more_left_branching,
    "standard": fewer_nonstandard,
}


# --- canonicalizing parser ----------------------------------------------------


@dataclass
class CanonicalChart:
    words: list[str]
    target: Category
    table: NFTable
    cells: dict[tuple[int, int], dict[int, tuple[ParseTree, NFRef]]] = field(default_factory=dict)
    replaced: int = 0
    discarded: int = 0

    @property
    def n(self) -> int:
        return len(self.words)

    def entries(self, span: Optional[tuple[int, int]] = None) -> list[tuple[ParseTree, NFRef]]:
        start, end = span if span is not None else (0, self.n)
        return list(self.cells.get((start, end), {}).values())

    def trees(self, category: Optional[Category] = None, span=None) -> list[ParseTree]:
        return [t for t, _ in self.entries(span) if category is None or t.category == category]

    def parses(self) -> list[ParseTree]:
        """Full-span representatives with the target category."""
        return self.trees(self.target)

    def key_of(self, t: ParseTree) -> NFRef:
        return self.table.nf(t)


def parse_canonical(
    words: Sequence[str],
    g: Grammar,
    prefer: PreferableTo | str = first_found,
) -> CanonicalChart:
    """CKY keeping one representative parse per NF key in each cell.

    Works for any rule restriction: the NF key is computed over pure CCG
    and need not itself be a legal parse.
    """
    if isinstance(prefer, str):
        prefer = PREFERENCES[prefer]
    if g.policy.enable_substitution:
        raise UnsupportedRule("canonical mode does not support substitution rules")
    words = list(words)
    if not words:
        raise ValueError("empty sentence")
    missing = [w for w in words if not g.lex_cats(w)]
    if missing:
        raise UnknownWord(list(dict.fromkeys(missing)))

    table = NFTable()
    chart = CanonicalChart(words, g.target, table)
    for i, w in enumerate(words):
        cell = chart.cells[(i, i + 1)] = {}
        for c in g.lex_cats(w):
            leaf = Leaf(i, w, c)
            ref = table.leaf(leaf)
            ref.currparse = leaf
            ref.candidates = 1
            cell[ref.seqno] = (leaf, ref)

    policy = g.policy
    rule_cache: dict[tuple[Category, Category], list] = {}
    n = len(words)
    for width in range(2, n + 1):
        for start in range(0, n - width + 1):
            end = start + width
            cell = chart.cells[(start, end)] = {}
            for mid in range(start + 1, end):
                for bt, bnf in list(chart.cells[(start, mid)].values()):
                    for gt, gnf in list(chart.cells[(mid, end)].values()):
                        key = (bt.category, gt.category)
                        rules = rule_cache.get(key)
                        if rules is None:
                            rules = rule_cache[key] = [
                                r for r in enumerate_rules(*key, policy.max_degree) if policy.allows(r)
                            ]
                        for rule in rules:
                            alpha = Node(rule, bt, gt)
                            ref = table.combine(rule.kind, bnf, gnf)
                            ref.candidates += 1
                            if ref.currparse is None:
                                cell[ref.seqno] = (alpha, ref)
                                ref.currparse = alpha
                            elif prefer(alpha, ref.currparse):
                                del cell[ref.seqno]
                                cell[ref.seqno] = (alpha, ref)
                                ref.currparse = alpha
                                chart.replaced += 1
                            else:
                                chart.discarded += 1
            if log.isEnabledFor(logging.DEBUG):
                for t, ref in cell.values():
                    log.debug("[%d,%d] #%d %s (%d seen)", start, end, ref.seqno, t.category, ref.candidates)
    return chart


def nf_tag_ok(t: ParseTree) -> bool:
    """Every node of ``t`` passes the tag-based admissibility check."""
    return all(nf_admissible(n.rule, n.left.tag, n.right.tag) for n in iter_nodes(t))

