"""Lexicons and rule-set restriction policies."""
from __future__ import annotations

import io
from dataclasses import dataclass, field, replace
from typing import Iterable, Optional, TextIO

from .categories import (
    Category,
    CategorySyntaxError,
    RuleInstance,
    RuleKind,
    enumerate_rules,
    parse_category,
    parse_rule_kind,
)


class LexiconError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class PolicyError(ValueError):
    pass


@dataclass(frozen=True)
class LexEntry:
    word: str
    category: Category


def load_lexicon(source: TextIO | str) -> list[LexEntry]:
    """Read ``word<TAB>category`` lines; ``#`` starts a comment."""
    if isinstance(source, str):
        source = io.StringIO(source)
    entries = []
    seen = set()
    for lineno, raw in enumerate(source, 1):
        line = raw.split("#", 1)[0].rstrip("\r\n")
        if not line.strip():
            continue
        parts = line.split("\t")
        parts = [p.strip() for p in parts if p.strip()]
        if len(parts) != 2:
            raise LexiconError(lineno, f"expected 'word<TAB>category', got {raw.rstrip()!r}")
        word, text = parts
        try:
            category = parse_category(text)
        except CategorySyntaxError as e:
            raise LexiconError(lineno, str(e)) from None
        if (word, category) in seen:
            raise LexiconError(lineno, f"duplicate entry {word} := {category}")
        seen.add((word, category))
        entries.append(LexEntry(word, category))
    return entries


@dataclass(frozen=True)
class BlockPattern:
    left: Category
    right: Category
    kind: Optional[RuleKind] = None
    output: Optional[Category] = None

    def matches(self, r: RuleInstance) -> bool:
        if r.left != self.left or r.right != self.right:
            return False
        if self.kind is not None and r.kind != self.kind:
            return False
        return self.output is None or r.output == self.output

    def __str__(self) -> str:
        out = f"{self.left} + {self.right} -> {self.output if self.output is not None else '*'}"
        return out + (f" [{self.kind}]" if self.kind is not None else "")


@dataclass(frozen=True)
class RulePolicy:
    """Which rule instances the grammar contains.

    ``max_degree=None`` admits compositions of every degree (pure CCG).
    """

    max_degree: Optional[int] = 3
    allow_crossing: bool = True
    enable_substitution: bool = False
    blocked: frozenset[BlockPattern] = frozenset()

    @classmethod
    def pure(cls, substitution: bool = False) -> "RulePolicy":
        """Every instance of every template, at any degree."""
        return cls(None, True, substitution, frozenset())

    @classmethod
    def max_arity(cls, categories: Iterable[Category], substitution: bool = False) -> "RulePolicy":
        """Unrestricted except that degree is capped at the largest lexical arity.

        Derived categories can outgrow lexical ones, so this can lose
        readings that need a higher-degree rule; use :meth:`pure` for that.
        """
        return cls(max((c.arity for c in categories), default=0), True, substitution, frozenset())

    def block(self, *patterns: BlockPattern) -> "RulePolicy":
        return replace(self, blocked=self.blocked | frozenset(patterns))

    def allows(self, r: RuleInstance) -> bool:
        k = r.kind
        if k.substitution:
            if not self.enable_substitution:
                return False
        elif self.max_degree is not None and k.degree > self.max_degree:
            return False
        if not self.allow_crossing and r.crossing:
            return False
        return not any(p.matches(r) for p in self.blocked)


@dataclass(frozen=True)
class Grammar:
    lexicon: dict[str, tuple[Category, ...]]
    policy: RulePolicy = field(default_factory=RulePolicy)
    target: Category = field(default_factory=lambda: parse_category("S"))

    @classmethod
    def from_entries(
        cls,
        entries: Iterable[LexEntry],
        policy: Optional[RulePolicy] = None,
        target: Category | str = "S",
    ) -> "Grammar":
        lex: dict[str, list[Category]] = {}
        for e in entries:
            cats = lex.setdefault(e.word, [])
            if e.category in cats:
                raise ValueError(f"duplicate entry {e.word} := {e.category}")
            cats.append(e.category)
        if policy is None:
            policy = RulePolicy.pure()
        if isinstance(target, str):
            target = parse_category(target)
        return cls({w: tuple(cs) for w, cs in lex.items()}, policy, target)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, str]], **kw) -> "Grammar":
        return cls.from_entries((LexEntry(w, parse_category(c)) for w, c in pairs), **kw)

    def categories(self) -> set[Category]:
        return {c for cs in self.lexicon.values() for c in cs}

    def lex_cats(self, word: str) -> tuple[Category, ...]:
        return self.lexicon.get(word, ())

    def with_policy(self, policy: RulePolicy) -> "Grammar":
        return replace(self, policy=policy)

    def with_target(self, target: Category | str) -> "Grammar":
        if isinstance(target, str):
            target = parse_category(target)
        return replace(self, target=target)


def rule_allowed(g: Grammar, r: RuleInstance) -> bool:
    return g.policy.allows(r)


def parse_block(text: str) -> BlockPattern:
    """Parse ``<left> + <right> -> <output> [kind]``; output may be ``*``."""
    kind = None
    body = text.strip()
    if body.endswith("]"):
        open_at = body.rfind("[")
        if open_at < 0:
            raise PolicyError(f"unbalanced ']' in block pattern {text!r}")
        kind = parse_rule_kind(body[open_at + 1 : -1])
        body = body[:open_at].strip()
    if "->" not in body or "+" not in body.split("->")[0]:
        raise PolicyError(f"block pattern must look like 'L + R -> OUT [kind]': {text!r}")
    lhs, out_text = body.split("->", 1)
    left_text, right_text = lhs.split("+", 1)
    left, right = parse_category(left_text), parse_category(right_text)
    output = None if out_text.strip() == "*" else parse_category(out_text)
    pattern = BlockPattern(left, right, kind, output)
    if not any(pattern.matches(r) for r in enumerate_rules(left, right, None, substitution=True)):
        raise PolicyError(f"block pattern matches no rule instance: {text!r}")
    return pattern


_BOOL = {"true": True, "yes": True, "1": True, "false": False, "no": False, "0": False}


def load_policy(
    source: TextIO | str, base: Optional[RulePolicy] = None
) -> tuple[RulePolicy, Optional[Category]]:
    """Read a ``key = value`` policy file; returns the policy and target override."""
    if isinstance(source, str):
        source = io.StringIO(source)
    policy = base if base is not None else RulePolicy()
    target = None
    blocks = []
    for lineno, raw in enumerate(source, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise PolicyError(f"line {lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        try:
            if key == "max_degree":
                policy = replace(
                    policy, max_degree=None if value in ("none", "inf", "unbounded") else int(value)
                )
            elif key in ("allow_crossing", "enable_substitution"):
                if value.lower() not in _BOOL:
                    raise PolicyError(f"not a boolean: {value!r}")
                policy = replace(policy, **{key: _BOOL[value.lower()]})
            elif key == "target":
                target = parse_category(value)
            elif key == "block":
                blocks.append(parse_block(value))
            else:
                raise PolicyError(f"unknown key {key!r}")
        except (ValueError, PolicyError) as e:
            raise PolicyError(f"line {lineno}: {e}") from None
    return policy.block(*blocks), target
