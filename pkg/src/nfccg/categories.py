"""CCG categories and the binary rule templates that combine them.

Categories are immutable trees: an :class:`Atom` or a :class:`Slash`
``result / arg`` (forward) or ``result \\ arg`` (backward).  Slashes are
left-associative in the text syntax, so ``S\\NP/NP`` is ``(S\\NP)/NP``.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Iterator, Optional, Union


class Dir(enum.Enum):
    FWD = "/"
    BWD = "\\"

    def __str__(self) -> str:
        return self.value

    @property
    def arrow(self) -> str:
        return ">" if self is Dir.FWD else "<"


@dataclass(frozen=True)
class Atom:
    name: str
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not _ATOM_RE.fullmatch(self.name):
            raise ValueError(f"invalid atom name: {self.name!r}")
        object.__setattr__(self, "_hash", hash(("atom", self.name)))

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return self.name

    @property
    def arity(self) -> int:
        return 0

    @property
    def depth(self) -> int:
        return 0


@dataclass(frozen=True)
class Slash:
    result: "Category"
    dir: Dir
    arg: "Category"
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash((self.result, self.dir, self.arg)))

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Slash) or self._hash != other._hash:
            return False
        return self.dir is other.dir and self.arg == other.arg and self.result == other.result

    def __str__(self) -> str:
        return print_category(self)

    @property
    def arity(self) -> int:
        return 1 + self.result.arity

    @property
    def depth(self) -> int:
        return 1 + max(self.result.depth, self.arg.depth)


Category = Union[Atom, Slash]

_ATOM_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_TOKEN_RE = re.compile(r"\s*(?:([A-Za-z][A-Za-z0-9_]*)|([/\\()]))")


class CategorySyntaxError(ValueError):
    def __init__(self, text: str, pos: int, message: str):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise CategorySyntaxError(text, pos, f"unexpected character {text[pos]!r}")
        tokens.append((m.group(1) or m.group(2), m.start(1) if m.group(1) else m.start(2)))
        pos = m.end()
    return tokens


def parse_category(text: str) -> Category:
    """Parse category text; slashes associate to the left."""
    tokens = _tokenize(text)
    i = 0

    def peek() -> Optional[str]:
        return tokens[i][0] if i < len(tokens) else None

    def where() -> int:
        return tokens[i][1] if i < len(tokens) else len(text)

    def primary() -> Category:
        nonlocal i
        tok = peek()
        if tok is None:
            raise CategorySyntaxError(text, where(), "unexpected end of input")
        if tok == "(":
            i += 1
            inner = expr()
            if peek() != ")":
                raise CategorySyntaxError(text, where(), "expected ')'")
            i += 1
            return inner
        if tok in ("/", "\\", ")"):
            raise CategorySyntaxError(text, where(), f"unexpected {tok!r}")
        i += 1
        return Atom(tok)

    def expr() -> Category:
        nonlocal i
        cat = primary()
        while peek() in ("/", "\\"):
            d = Dir(peek())
            i += 1
            cat = Slash(cat, d, primary())
        return cat

    result = expr()
    if i != len(tokens):
        raise CategorySyntaxError(text, where(), f"trailing {peek()!r}")
    return result


def print_category(c: Category, full_parens: bool = False) -> str:
    """Render with minimal parentheses (or every slash bracketed)."""
    if isinstance(c, Atom):
        return c.name
    if full_parens:
        return f"({print_category(c.result, True)}{c.dir}{print_category(c.arg, True)})"
    left = print_category(c.result)
    right = print_category(c.arg)
    if isinstance(c.arg, Slash):
        right = f"({right})"
    return f"{left}{c.dir}{right}"


def cat(text: str) -> Category:
    """Shorthand for :func:`parse_category`."""
    return parse_category(text)


def peel(c: Category, n: int) -> Optional[tuple[Category, list[tuple[Dir, Category]]]]:
    """Strip the ``n`` outermost argument slashes of ``c``.

    Returns the remaining core and the stripped ``(dir, arg)`` pairs,
    outermost first, or None if ``c`` has fewer than ``n`` slashes.
    """
    stripped = []
    for _ in range(n):
        if not isinstance(c, Slash):
            return None
        stripped.append((c.dir, c.arg))
        c = c.result
    return c, stripped


def attach(core: Category, stripped: list[tuple[Dir, Category]]) -> Category:
    """Inverse of :func:`peel`."""
    for d, z in reversed(stripped):
        core = Slash(core, d, z)
    return core


# --- rules -----------------------------------------------------------------


@dataclass(frozen=True)
class RuleKind:
    """``>Bn``/``<Bn`` generalized composition, or ``>S``/``<S`` substitution.

    Substitution always strips exactly one argument, so its degree is 1.
    """

    substitution: bool
    dir: Dir
    degree: int = 0

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("degree must be >= 0")
        if self.substitution and self.degree != 1:
            raise ValueError("substitution has degree 1")

    @classmethod
    def compose(cls, d: Dir, degree: int) -> "RuleKind":
        return cls(False, d, degree)

    @classmethod
    def substitute(cls, d: Dir) -> "RuleKind":
        return cls(True, d, 1)

    @property
    def forward(self) -> bool:
        return self.dir is Dir.FWD

    @property
    def is_application(self) -> bool:
        return not self.substitution and self.degree == 0

    @property
    def sort_key(self) -> tuple[bool, bool, int]:
        return (self.substitution, self.dir is Dir.BWD, self.degree)

    def __str__(self) -> str:
        return f"{self.dir.arrow}S" if self.substitution else f"{self.dir.arrow}B{self.degree}"


_KIND_RE = re.compile(r"([<>])(B(\d+)|S)")


def parse_rule_kind(text: str) -> RuleKind:
    m = _KIND_RE.fullmatch(text.strip())
    if m is None:
        raise ValueError(f"bad rule kind {text!r}; expected e.g. >B0, <B2, >S")
    d = Dir.FWD if m.group(1) == ">" else Dir.BWD
    if m.group(2) == "S":
        return RuleKind.substitute(d)
    return RuleKind.compose(d, int(m.group(3)))


@dataclass(frozen=True)
class RuleInstance:
    kind: RuleKind
    left: Category
    right: Category
    output: Category

    @property
    def functor(self) -> Category:
        return self.left if self.kind.forward else self.right

    @property
    def secondary(self) -> Category:
        return self.right if self.kind.forward else self.left

    @property
    def crossing(self) -> bool:
        """True if some ``|i`` differs from the functor's own slash direction."""
        stripped = peel(self.secondary, self.kind.degree)
        assert stripped is not None
        return any(d is not self.kind.dir for d, _ in stripped[1])

    def __str__(self) -> str:
        return f"{self.left} + {self.right} -> {self.output} [{self.kind}]"


def try_compose(left: Category, right: Category, d: Dir, degree: int) -> Optional[Category]:
    if degree < 0:
        raise ValueError("degree must be >= 0")
    if d is Dir.FWD:
        functor, other = left, right
    else:
        functor, other = right, left
    if not isinstance(functor, Slash) or functor.dir is not d:
        return None
    peeled = peel(other, degree)
    if peeled is None:
        return None
    core, stripped = peeled
    if core != functor.arg:
        return None
    return attach(functor.result, stripped)


def try_substitute(left: Category, right: Category, d: Dir) -> Optional[Category]:
    if d is Dir.FWD:
        functor, other = left, right
    else:
        functor, other = right, left
    # functor = (x|y)|1 z, other = y|1 z
    if not (isinstance(functor, Slash) and isinstance(other, Slash)):
        return None
    if functor.dir is not other.dir or functor.arg != other.arg:
        return None
    inner = functor.result
    if not isinstance(inner, Slash) or inner.dir is not d or inner.arg != other.result:
        return None
    return Slash(inner.result, functor.dir, functor.arg)


def apply_kind(kind: RuleKind, left: Category, right: Category) -> Optional[Category]:
    if kind.substitution:
        return try_substitute(left, right, kind.dir)
    return try_compose(left, right, kind.dir, kind.degree)


def instantiate(kind: RuleKind, left: Category, right: Category) -> Optional[RuleInstance]:
    out = apply_kind(kind, left, right)
    return None if out is None else RuleInstance(kind, left, right, out)


def enumerate_rules(
    left: Category,
    right: Category,
    max_degree: Optional[int] = None,
    substitution: bool = False,
) -> list[RuleInstance]:
    """Every rule instance combining ``left`` and ``right``.

    ``max_degree=None`` means unbounded: the degree is tried up to the
    arity of the secondary operand, beyond which no template can match.
    Order: forward compositions by degree, backward compositions by degree,
    then forward and backward substitution.
    """
    out = []
    for d, other in ((Dir.FWD, right), (Dir.BWD, left)):
        top = other.arity if max_degree is None else min(max_degree, other.arity)
        for n in range(top + 1):
            res = try_compose(left, right, d, n)
            if res is not None:
                out.append(RuleInstance(RuleKind.compose(d, n), left, right, res))
    if substitution:
        for d in (Dir.FWD, Dir.BWD):
            res = try_substitute(left, right, d)
            if res is not None:
                out.append(RuleInstance(RuleKind.substitute(d), left, right, res))
    return out


def subcategories(c: Category) -> Iterator[Category]:
    yield c
    if isinstance(c, Slash):
        yield from subcategories(c.result)
        yield from subcategories(c.arg)
