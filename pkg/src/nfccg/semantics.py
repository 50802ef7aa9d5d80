"""Static recipes: lambda terms over leaf variables.

A parse tree's recipe says how the word meanings are put together.  Two
parses are semantically equivalent when their beta-normal recipes agree.
Binders use de Bruijn indices, so alpha-equivalence is plain structural
equality and recipes can be used directly as dict keys.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

from .categories import RuleKind


@dataclass(frozen=True)
class LeafVar:
    position: int


@dataclass(frozen=True)
class BoundVar:
    index: int  # de Bruijn: 0 is the nearest enclosing Lam


@dataclass(frozen=True)
class Name:
    """Named variable, only valid before being closed by :func:`lam`."""

    name: str


@dataclass(frozen=True)
class Lam:
    body: "Recipe"
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash(("lam", self.body)))

    def __hash__(self) -> int:
        return self._hash


@dataclass(frozen=True)
class App:
    fun: "Recipe"
    arg: "Recipe"
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash(("app", self.fun, self.arg)))

    def __hash__(self) -> int:
        return self._hash


Recipe = Union[LeafVar, BoundVar, Name, Lam, App]


class ReductionLimitExceeded(RuntimeError):
    pass


class MalformedTree(ValueError):
    pass


def apps(fun: Recipe, *args: Recipe) -> Recipe:
    for a in args:
        fun = App(fun, a)
    return fun


def lam(name: str, body: Recipe) -> Lam:
    """Bind free occurrences of ``Name(name)`` in ``body``."""

    def close(t: Recipe, depth: int) -> Recipe:
        if isinstance(t, Name):
            return BoundVar(depth) if t.name == name else t
        if isinstance(t, Lam):
            return Lam(close(t.body, depth + 1))
        if isinstance(t, App):
            return App(close(t.fun, depth), close(t.arg, depth))
        return t

    return Lam(close(body, 0))


# --- construction from parse trees -----------------------------------------


def combine_recipes(kind: RuleKind, left: Recipe, right: Recipe) -> Recipe:
    """The recipe of a node built by ``kind`` from its children's recipes.

    ``left``/``right`` must be closed (no free BoundVars).
    """
    if kind.forward:
        f, g = left, right
    else:
        f, g = right, left
    if kind.substitution:
        # \z. f(z)(g(z))
        z = BoundVar(0)
        return Lam(App(App(f, z), App(g, z)))
    n = kind.degree
    # \c1..\cn. f(g(c1)...(cn)); under n binders c_i has index n - i
    body = g
    for i in range(1, n + 1):
        body = App(body, BoundVar(n - i))
    body = App(f, body)
    for _ in range(n):
        body = Lam(body)
    return body


def recipe_of(tree) -> Recipe:
    """Unreduced recipe of a parse tree (see :mod:`nfccg.chart`)."""
    from .chart import Leaf

    if isinstance(tree, Leaf):
        return LeafVar(tree.position)
    r = tree.rule
    if r.left != tree.left.category or r.right != tree.right.category:
        raise MalformedTree(f"rule {r} does not match children {tree.left.category}, {tree.right.category}")
    return combine_recipes(r.kind, recipe_of(tree.left), recipe_of(tree.right))


# --- reduction --------------------------------------------------------------


def _shift(t: Recipe, d: int, cutoff: int = 0) -> Recipe:
    if isinstance(t, BoundVar):
        return BoundVar(t.index + d) if t.index >= cutoff else t
    if isinstance(t, Lam):
        return Lam(_shift(t.body, d, cutoff + 1))
    if isinstance(t, App):
        return App(_shift(t.fun, d, cutoff), _shift(t.arg, d, cutoff))
    return t


def _subst(t: Recipe, j: int, s: Recipe) -> Recipe:
    if isinstance(t, BoundVar):
        return s if t.index == j else t
    if isinstance(t, Lam):
        return Lam(_subst(t.body, j + 1, _shift(s, 1)))
    if isinstance(t, App):
        return App(_subst(t.fun, j, s), _subst(t.arg, j, s))
    return t


def _beta(lam_: Lam, arg: Recipe) -> Recipe:
    return _shift(_subst(lam_.body, 0, _shift(arg, 1)), -1)


def beta_normalize(r: Recipe, max_steps: int = 10_000) -> Recipe:
    """Normal-order (leftmost-outermost) reduction to beta-normal form."""
    if max_steps <= 0:
        raise ValueError("max_steps must be positive")
    steps = 0

    def whnf(t: Recipe) -> Recipe:
        nonlocal steps
        while isinstance(t, App):
            f = whnf(t.fun)
            if not isinstance(f, Lam):
                return App(f, t.arg) if f is not t.fun else t
            steps += 1
            if steps > max_steps:
                raise ReductionLimitExceeded(f"beta reduction exceeded {max_steps} steps")
            t = _beta(f, t.arg)
        return t

    def norm(t: Recipe) -> Recipe:
        t = whnf(t)
        if isinstance(t, Lam):
            return Lam(norm(t.body))
        if isinstance(t, App):
            return App(norm(t.fun), norm(t.arg))
        return t

    return norm(r)


def is_beta_normal(r: Recipe) -> bool:
    if isinstance(r, Lam):
        return is_beta_normal(r.body)
    if isinstance(r, App):
        return not isinstance(r.fun, Lam) and is_beta_normal(r.fun) and is_beta_normal(r.arg)
    return True


def alpha_equal(a: Recipe, b: Recipe) -> bool:
    return a == b


def normal_recipe(tree, max_steps: int = 10_000) -> Recipe:
    return beta_normalize(recipe_of(tree), max_steps)


def group_into_classes(trees: Iterable, max_steps: int = 10_000) -> list[list]:
    """Partition trees by normalized recipe, in order of first appearance.

    Trees over different lexical entries for the same words are never put
    in one class, even if their recipes coincide.
    """
    from .chart import leaves

    classes: dict[tuple, list] = {}
    for t in trees:
        key = (tuple(l.category for l in leaves(t)), normal_recipe(t, max_steps))
        classes.setdefault(key, []).append(t)
    return list(classes.values())


# --- rendering --------------------------------------------------------------


def render(r: Recipe, words: Sequence[str] | None = None) -> str:
    """``john_0(likes_1(mary_2))``; binders print as ``λx1.``, ``λx2.`` by depth."""

    def leaf(p: int) -> str:
        w = words[p].lower() if words is not None and p < len(words) else "w"
        return f"{w}_{p}"

    def go(t: Recipe, depth: int) -> str:
        if isinstance(t, LeafVar):
            return leaf(t.position)
        if isinstance(t, BoundVar):
            return f"x{depth - t.index}"
        if isinstance(t, Name):
            return t.name
        if isinstance(t, Lam):
            return f"λx{depth + 1}.{go(t.body, depth + 1)}"
        head, args = t, []
        while isinstance(head, App):
            args.append(head.arg)
            head = head.fun
        h = go(head, depth)
        if isinstance(head, Lam):
            h = f"({h})"
        return h + "".join(f"({go(a, depth)})" for a in reversed(args))

    return go(r, 0)
