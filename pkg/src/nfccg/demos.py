"""Built-in worked examples with their expected results."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Callable, Optional

from .canonical import nf_rewrite, parse_canonical
from .categories import Dir, RuleKind, parse_category
from .chart import Leaf, iter_nodes, parse_exhaustive, parse_nf, recipe_classes, render_tree
from .grammar import BlockPattern, Grammar, RulePolicy

GALOOT_LEXICON = [
    ("the", "NP/N"),
    ("galoot", "N"),
    ("in", r"(N\N)/NP"),
    ("corner", "N"),
    ("that", r"(N\N)/(S/NP)"),
    ("I", r"S/(S\NP)"),
    ("said", r"(S\NP)/S"),
    ("Mary", r"S/(S\NP)"),
    ("pretends", r"(S\NP)/(S_inf\NP)"),
    ("to", r"(S_inf\NP)/(S_stem\NP)"),
    ("like", r"(S_stem\NP)/NP"),
]
GALOOT_SENTENCE = "the galoot in the corner that I said Mary pretends to like".split()

JOHN_LEXICON = [("John", r"S/(S\NP)"), ("likes", r"(S\NP)/NP"), ("Mary", "NP")]
JOHN_SENTENCE = ["John", "likes", "Mary"]


def galoot_grammar(policy: Optional[RulePolicy] = None) -> Grammar:
    return Grammar.from_pairs(GALOOT_LEXICON, policy=policy, target="NP")


def john_grammar(policy: Optional[RulePolicy] = None) -> Grammar:
    return Grammar.from_pairs(JOHN_LEXICON, policy=policy, target="S")


def pseudo_grammar(cats: list[str], target: str, policy: Optional[RulePolicy] = None) -> tuple[list[str], Grammar]:
    """Each category string is its own word."""
    return list(cats), Grammar.from_pairs([(c, c) for c in dict.fromkeys(cats)], policy=policy, target=target)


def forward_chain(k: int) -> tuple[list[str], Grammar]:
    """``A1/A2 A2/A3 ... A(k-1)/Ak Ak``."""
    cats = [f"A{i}/A{i + 1}" for i in range(1, k)] + [f"A{k}"]
    return pseudo_grammar(cats, "A1")


def backward_chain(k: int) -> tuple[list[str], Grammar]:
    r"""``Ak A(k-1)\Ak ... A1\A2``."""
    cats = [f"A{k}"] + [f"A{i}\\A{i + 1}" for i in range(k - 1, 0, -1)]
    return pseudo_grammar(cats, "A1")


def modifiers(n: int) -> tuple[list[str], Grammar]:
    r"""``(S/S)^n S (S\S)^n``, each modifier a distinct word."""
    words = [f"pre{i}" for i in range(n)] + ["s"] + [f"post{i}" for i in range(n)]
    pairs = [(w, "S/S") for w in words[:n]] + [("s", "S")] + [(w, "S\\S") for w in words[n + 1 :]]
    return words, Grammar.from_pairs(pairs)


def blocked_chain() -> tuple[list[str], Grammar]:
    """``A/B B/C C`` with only the instance ``B/C C -> B`` removed."""
    words, g = pseudo_grammar(["A/B", "B/C", "C"], "A")
    pattern = BlockPattern(
        parse_category("B/C"), parse_category("C"), RuleKind.compose(Dir.FWD, 0), parse_category("B")
    )
    return words, g.with_policy(RulePolicy.pure().block(pattern))


def class_sizes(chart, target) -> list[int]:
    return sorted(recipe_classes(chart, target).values(), reverse=True)


def right_branching(t) -> bool:
    return all(isinstance(n.left, Leaf) for n in iter_nodes(t))


def left_branching(t) -> bool:
    return all(isinstance(n.right, Leaf) for n in iter_nodes(t))


# --- report -------------------------------------------------------------------


@dataclass
class DemoReport:
    name: str
    rows: list[tuple[str, object, object]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def check(self, quantity: str, expected, actual) -> None:
        self.rows.append((quantity, expected, actual))

    @property
    def ok(self) -> bool:
        return all(e == a for _, e, a in self.rows)

    def text(self) -> str:
        w = max([len(q) for q, _, _ in self.rows] + [8])
        lines = [f"demo: {self.name}", f"{'quantity':<{w}}  {'expected':>12}  {'actual':>12}  ok"]
        for q, e, a in self.rows:
            lines.append(f"{q:<{w}}  {str(e):>12}  {str(a):>12}  {'yes' if e == a else 'NO'}")
        lines.extend(self.notes)
        return "\n".join(lines) + "\n"


def demo_galoot(n: Optional[int] = None) -> DemoReport:
    rep = DemoReport("galoot")
    g = galoot_grammar(RulePolicy.max_arity(galoot_grammar().categories()))
    words = GALOOT_SENTENCE
    E = parse_exhaustive(words, g)
    N = parse_nf(words, g)
    C = parse_canonical(words, g)
    rep.notes.append(f"max degree: {g.policy.max_degree}")
    rep.check("total", 252, E.count(g.target))
    rep.check("class sizes", [168, 84], class_sizes(E, g.target))
    rep.check("nf", 2, N.count(g.target))
    rep.check("canonical", 2, len(C.parses()))
    return rep


def demo_john(n: Optional[int] = None) -> DemoReport:
    rep = DemoReport("john")
    g = john_grammar()
    E = parse_exhaustive(JOHN_SENTENCE, g)
    N = parse_nf(JOHN_SENTENCE, g)
    rep.check("total", 2, E.count(g.target))
    rep.check("classes", 1, len(class_sizes(E, g.target)))
    rep.check("nf", 1, N.count(g.target))
    for t in N.trees(g.target):
        rep.notes.append(f"nf tree: {render_tree(t)}")
    for b in N.blocked:
        rep.notes.append(f"blocked: {b}")
    return rep


def demo_chain_b2(n: Optional[int] = None) -> DemoReport:
    rep = DemoReport("chain-b2")
    words, g = pseudo_grammar(["A/B", "B/C", "C/D/E"], "A/D/E")
    E = parse_exhaustive(words, g)
    N = parse_nf(words, g)
    (nf_tree,) = N.trees(g.target)
    nf_degrees = [str(x.rule.kind) for x in iter_nodes(nf_tree)]
    (other,) = [t for t in E.trees(g.target) if t != nf_tree]
    rep.check("total", 2, E.count(g.target))
    rep.check("nf", 1, N.count(g.target))
    rep.check("nf rules", [">B2", ">B2"], nf_degrees)
    rep.check("other rules", [">B1", ">B2"], [str(x.rule.kind) for x in iter_nodes(other)])
    rep.check("rewrite", render_tree(nf_tree), render_tree(nf_rewrite(other)))
    rep.notes.append(f"nf tree: {render_tree(nf_tree)}")
    rep.notes.append(f"non-nf tree: {render_tree(other)}")
    return rep


def demo_blocked(n: Optional[int] = None) -> DemoReport:
    rep = DemoReport("blocked")
    words, g = blocked_chain()
    N = parse_nf(words, g)
    C = parse_canonical(words, g)
    rep.check("nf", 0, N.count(g.target))
    rep.check("canonical", 1, len(C.parses()))
    for t in C.parses():
        rep.check("left-branching", True, left_branching(t))
        key = C.key_of(t).tree
        rep.check("key right-branching", True, right_branching(key))
        rep.notes.append(f"parse:  {render_tree(t)}")
        rep.notes.append(f"nf key: {render_tree(key)}  (not a legal parse here)")
    return rep


def demo_modifiers(n: Optional[int] = None) -> DemoReport:
    n = 1 if n is None else n
    if not 1 <= n <= 4:
        raise ValueError("modifiers demo takes 1 <= n <= 4")
    from .semantics import group_into_classes

    rep = DemoReport(f"modifiers n={n}")
    words, g = modifiers(n)
    E = parse_exhaustive(words, g)
    N = parse_nf(words, g)
    trees = E.trees(g.target)
    classes = group_into_classes(trees)
    rep.check("classes (brute force)", comb(2 * n, n), len(classes))
    rep.check("nf", len(classes), N.count(g.target))
    rep.notes.append(f"total parses: {len(trees)}")
    return rep


def demo_chain(n: Optional[int] = None) -> DemoReport:
    k = 4 if n is None else n
    rep = DemoReport(f"chain k={k}")
    for name, build, shape in (("forward", forward_chain, right_branching), ("backward", backward_chain, left_branching)):
        words, g = build(k)
        E = parse_exhaustive(words, g)
        N = parse_nf(words, g)
        rep.check(f"{name} total", comb(2 * (k - 1), k - 1) // k, E.count(g.target))
        rep.check(f"{name} nf", 1, N.count(g.target))
        rep.check(f"{name} nf shape", True, all(shape(t) for t in N.trees(g.target)))
    return rep


DEMOS: dict[str, Callable[[Optional[int]], DemoReport]] = {
    "galoot": demo_galoot,
    "john": demo_john,
    "chain-b2": demo_chain_b2,
    "blocked": demo_blocked,
    "modifiers": demo_modifiers,
    "chain": demo_chain,
}


def demo(name: str, n: Optional[int] = None) -> DemoReport:
    try:
        fn = DEMOS[name]
    except KeyError:
        raise KeyError(f"unknown demo {name!r}; choose from {', '.join(DEMOS)}") from None
    return fn(n)
