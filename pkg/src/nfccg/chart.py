"""CKY chart parsing, exhaustive or restricted to normal-form derivations."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence, Union

from .categories import Category, RuleInstance, RuleKind, enumerate_rules
from .grammar import Grammar


class UnknownWord(KeyError):
    def __init__(self, words: Sequence[str]):
        super().__init__(", ".join(words))
        self.words = list(words)

    def __str__(self) -> str:
        return "unknown word(s): " + ", ".join(self.words)


class TooManyParses(RuntimeError):
    def __init__(self, count: int, cap: int):
        super().__init__(f"{count} parses exceed the enumeration cap of {cap}")
        self.count = count
        self.cap = cap


# --- tags -------------------------------------------------------------------


@dataclass(frozen=True)
class Tag:
    """Which kind of rule produced a constituent: OT, FC(n), BC(n), SF or SB."""

    name: str
    degree: int = 0

    def label(self, verbose: bool = False) -> str:
        if self.name in ("FC", "BC"):
            return f"{self.name}{self.degree if verbose else min(self.degree, 2)}"
        return self.name

    def __str__(self) -> str:
        return self.label()


OT = Tag("OT")
SF = Tag("SF")
SB = Tag("SB")


def FC(n: int) -> Tag:
    return Tag("FC", n)


def BC(n: int) -> Tag:
    return Tag("BC", n)


def output_tag(rule: RuleInstance | RuleKind) -> Tag:
    k = rule.kind if isinstance(rule, RuleInstance) else rule
    if k.substitution:
        return SF if k.forward else SB
    if k.degree == 0:
        return OT
    return FC(k.degree) if k.forward else BC(k.degree)


def nf_admissible(rule: RuleInstance | RuleKind, left_tag: Tag, right_tag: Tag) -> bool:
    """May a node of this rule have children carrying these tags?

    Only the primary (functor) child is constrained: a composition output
    may not be the functor of a same-direction rule, except that
    substitution only refuses outputs of degree >= 2.
    """
    k = rule.kind if isinstance(rule, RuleInstance) else rule
    primary = left_tag if k.forward else right_tag
    banned = "FC" if k.forward else "BC"
    if primary.name != banned:
        return True
    if k.substitution:
        return primary.degree < 2
    return False


# --- parse trees ------------------------------------------------------------


@dataclass(frozen=True)
class Leaf:
    position: int
    word: str
    category: Category

    tag = OT

    @property
    def start(self) -> int:
        return self.position

    @property
    def end(self) -> int:
        return self.position + 1


@dataclass(frozen=True)
class Node:
    rule: RuleInstance
    left: "ParseTree"
    right: "ParseTree"
    category: Category = field(init=False)
    tag: Tag = field(init=False)
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.left.category != self.rule.left or self.right.category != self.rule.right:
            raise ValueError(f"rule {self.rule} does not match children")
        if self.left.end != self.right.start:
            raise ValueError("children are not adjacent")
        object.__setattr__(self, "category", self.rule.output)
        object.__setattr__(self, "tag", output_tag(self.rule))
        object.__setattr__(self, "_hash", hash((self.rule, self.left, self.right)))

    def __hash__(self) -> int:
        return self._hash

    @property
    def start(self) -> int:
        return self.left.start

    @property
    def end(self) -> int:
        return self.right.end


ParseTree = Union[Leaf, Node]


def iter_nodes(t: ParseTree) -> Iterator[Node]:
    if isinstance(t, Node):
        yield from iter_nodes(t.left)
        yield from iter_nodes(t.right)
        yield t


def leaves(t: ParseTree) -> list[Leaf]:
    if isinstance(t, Leaf):
        return [t]
    return leaves(t.left) + leaves(t.right)


def render_tree(t: ParseTree, verbose: bool = False) -> str:
    if isinstance(t, Leaf):
        return f"[{t.word}]"
    return f"[{render_tree(t.left, verbose)} {render_tree(t.right, verbose)}]{t.category}-{t.tag.label(verbose)}"


def is_normal_form(t: ParseTree) -> bool:
    """Check the normal-form constraints directly on the tree's rules.

    Independent of :func:`nf_admissible` and the tag machinery: walks the
    tree and inspects the rule that built each node's functor child.
    """
    for node in iter_nodes(t):
        k = node.rule.kind
        child = node.left if k.forward else node.right
        if not isinstance(child, Node):
            continue
        ck = child.rule.kind
        if ck.substitution or ck.dir is not k.dir or ck.degree == 0:
            continue
        if not k.substitution or ck.degree >= 2:
            return False
    return True


# --- chart ------------------------------------------------------------------


@dataclass(eq=False)
class Item:
    category: Category
    tag: Tag
    start: int
    end: int
    word: Optional[str] = None
    derivations: list[tuple[RuleInstance, "Item", "Item"]] = field(default_factory=list)

    @property
    def lexical(self) -> bool:
        return self.word is not None

    def __repr__(self) -> str:
        return f"Item({self.category}-{self.tag.label(True)} [{self.start},{self.end}] x{len(self.derivations)})"


@dataclass(frozen=True)
class BlockedUse:
    start: int
    mid: int
    end: int
    rule: RuleInstance
    left_tag: Tag
    right_tag: Tag

    def __str__(self) -> str:
        return (
            f"[{self.start},{self.mid},{self.end}] {self.rule.left}-{self.left_tag} + "
            f"{self.rule.right}-{self.right_tag} -> {self.rule.output} [{self.rule.kind}]"
        )


@dataclass
class Chart:
    words: list[str]
    mode: str
    cells: dict[tuple[int, int], dict[tuple[Category, Tag], Item]] = field(default_factory=dict)
    blocked: list[BlockedUse] = field(default_factory=list)

    @property
    def n(self) -> int:
        return len(self.words)

    def items(self, start: int = 0, end: Optional[int] = None, category: Optional[Category] = None) -> list[Item]:
        end = self.n if end is None else end
        cell = self.cells.get((start, end), {})
        return [it for it in cell.values() if category is None or it.category == category]

    def categories(self, start: int = 0, end: Optional[int] = None) -> list[Category]:
        seen = {}
        for it in self.items(start, end):
            seen.setdefault(it.category, None)
        return list(seen)

    def count(self, category: Optional[Category] = None, span: Optional[tuple[int, int]] = None) -> int:
        """Number of trees (without unpacking) for items over ``span``."""
        start, end = span if span is not None else (0, self.n)
        memo: dict[int, int] = {}

        def c(item: Item) -> int:
            got = memo.get(id(item))
            if got is None:
                if item.lexical:
                    got = 1
                else:
                    got = sum(c(l) * c(r) for _, l, r in item.derivations)
                memo[id(item)] = got
            return got

        return sum(c(it) for it in self.items(start, end, category))

    def trees(
        self,
        category: Optional[Category] = None,
        span: Optional[tuple[int, int]] = None,
        cap: int = 1_000_000,
    ) -> list[ParseTree]:
        return enumerate_trees(self, span, category, cap)


def enumerate_trees(
    chart: Chart,
    span: Optional[tuple[int, int]] = None,
    category: Optional[Category] = None,
    cap: int = 1_000_000,
) -> list[ParseTree]:
    if cap <= 0:
        raise ValueError("cap must be positive")
    start, end = span if span is not None else (0, chart.n)
    total = chart.count(category, (start, end))
    if total > cap:
        raise TooManyParses(total, cap)
    memo: dict[int, list[ParseTree]] = {}

    def unpack(item: Item) -> list[ParseTree]:
        got = memo.get(id(item))
        if got is not None:
            return got
        if item.lexical:
            got = [Leaf(item.start, item.word, item.category)]
        else:
            got = []
            for rule, l, r in item.derivations:
                for lt in unpack(l):
                    for rt in unpack(r):
                        got.append(Node(rule, lt, rt))
        memo[id(item)] = got
        return got

    out: list[ParseTree] = []
    for it in chart.items(start, end, category):
        out.extend(unpack(it))
    return out


def _lexical_cells(words: Sequence[str], g: Grammar) -> dict[tuple[int, int], dict]:
    missing = [w for w in words if not g.lex_cats(w)]
    if missing:
        raise UnknownWord(list(dict.fromkeys(missing)))
    cells = {}
    for i, w in enumerate(words):
        cells[(i, i + 1)] = {(c, OT): Item(c, OT, i, i + 1, word=w) for c in g.lex_cats(w)}
    return cells


def _parse(words: Sequence[str], g: Grammar, normal_form: bool) -> Chart:
    words = list(words)
    if not words:
        raise ValueError("empty sentence")
    chart = Chart(words, "nf" if normal_form else "all", _lexical_cells(words, g))
    policy = g.policy
    rule_cache: dict[tuple[Category, Category], list[RuleInstance]] = {}

    def rules_for(lc: Category, rc: Category) -> list[RuleInstance]:
        key = (lc, rc)
        got = rule_cache.get(key)
        if got is None:
            got = [
                r
                for r in enumerate_rules(lc, rc, policy.max_degree, policy.enable_substitution)
                if policy.allows(r)
            ]
            rule_cache[key] = got
        return got

    n = len(words)
    for width in range(2, n + 1):
        for start in range(0, n - width + 1):
            end = start + width
            cell = chart.cells.setdefault((start, end), {})
            for mid in range(start + 1, end):
                for l in chart.cells[(start, mid)].values():
                    for r in chart.cells[(mid, end)].values():
                        for rule in rules_for(l.category, r.category):
                            if normal_form and not nf_admissible(rule, l.tag, r.tag):
                                chart.blocked.append(BlockedUse(start, mid, end, rule, l.tag, r.tag))
                                continue
                            tag = output_tag(rule)
                            key = (rule.output, tag)
                            item = cell.get(key)
                            if item is None:
                                item = cell[key] = Item(rule.output, tag, start, end)
                            item.derivations.append((rule, l, r))
    return chart


def parse_exhaustive(words: Sequence[str], g: Grammar) -> Chart:
    """Every derivation the grammar allows."""
    return _parse(words, g, normal_form=False)


def parse_nf(words: Sequence[str], g: Grammar) -> Chart:
    """Only derivations whose every node passes :func:`nf_admissible`."""
    return _parse(words, g, normal_form=True)


def recipe_classes(chart: Chart, category: Optional[Category] = None, span=None) -> dict:
    """Map each semantic class over ``span`` to its number of trees.

    A class key is ``(category, leaf categories, normalized recipe)``: trees
    that pick different lexical entries are analyses of different leaf
    sequences and never equivalent.  Computed bottom-up over the packed
    chart, so nothing is unpacked; this relies on beta-normalization being
    compositional over subterms.
    """
    from .semantics import LeafVar, beta_normalize, combine_recipes

    start, end = span if span is not None else (0, chart.n)
    memo: dict[int, dict] = {}

    def go(item: Item) -> dict:
        got = memo.get(id(item))
        if got is not None:
            return got
        got = {}
        if item.lexical:
            got[((item.category,), LeafVar(item.start))] = 1
        else:
            for rule, l, r in item.derivations:
                for (lcats, lr), lc in go(l).items():
                    for (rcats, rr), rc in go(r).items():
                        key = (lcats + rcats, beta_normalize(combine_recipes(rule.kind, lr, rr)))
                        got[key] = got.get(key, 0) + lc * rc
        memo[id(item)] = got
        return got

    total: dict = {}
    for it in chart.items(start, end, category):
        for (cats, recipe), v in go(it).items():
            key = (it.category, cats, recipe)
            total[key] = total.get(key, 0) + v
    return total
