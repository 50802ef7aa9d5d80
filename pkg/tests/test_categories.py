import pytest
from hypothesis import given, strategies as st

from nfccg.categories import (
    Atom,
    CategorySyntaxError,
    Dir,
    RuleKind,
    Slash,
    attach,
    enumerate_rules,
    parse_category,
    parse_rule_kind,
    print_category,
    try_compose,
    try_substitute,
)

from strategies import categories, dirs

F, B = Dir.FWD, Dir.BWD
S, NP, N = Atom("S"), Atom("NP"), Atom("N")


def c(text):
    return parse_category(text)


class TestParsePrint:
    def test_left_associative(self):
        assert c(r"S\NP/NP") == Slash(Slash(S, B, NP), F, NP)

    def test_atomic(self):
        assert c("NP") == NP

    def test_parenthesized_argument(self):
        assert c(r"(N\N)/(S/NP)") == Slash(Slash(N, B, N), F, Slash(S, F, NP))

    def test_nested_modifier_category(self):
        assert c(r"S\NP\(S\NP)/N") == c(r"((S\NP)\(S\NP))/N")

    @pytest.mark.parametrize(
        "cat, text",
        [
            (Slash(Slash(S, B, NP), F, NP), r"S\NP/NP"),
            (N, "N"),
            (Slash(Slash(S, F, NP), F, N), "S/NP/N"),
            (Slash(S, F, Slash(S, B, NP)), r"S/(S\NP)"),
        ],
    )
    def test_print(self, cat, text):
        assert print_category(cat) == text

    def test_full_parens(self):
        assert print_category(c(r"S\NP/NP"), full_parens=True) == r"((S\NP)/NP)"

    def test_feature_atoms_are_distinct(self):
        assert c("S_inf") != c("S")

    @pytest.mark.parametrize("bad", ["", "S/", "/S", "(S", "S)", "S//NP", "S NP", "S-NP", "1A"])
    def test_syntax_errors(self, bad):
        with pytest.raises(CategorySyntaxError) as exc:
            parse_category(bad)
        assert "position" in str(exc.value)

    @given(categories(5))
    def test_round_trip(self, cat):
        assert parse_category(print_category(cat)) == cat
        assert parse_category(print_category(cat, full_parens=True)) == cat


class TestCompose:
    def test_application(self):
        assert try_compose(c("S/NP"), NP, F, 0) == S

    def test_crossing_composition(self):
        assert try_compose(c("A/B"), c(r"B\C"), F, 1) == c(r"A\C")

    def test_mismatch_is_none(self):
        assert try_compose(c("A/B"), c("C/D"), F, 1) is None

    def test_backward_degree_two(self):
        assert try_compose(c("B/D/E"), c(r"A\B"), B, 2) == c("A/D/E")

    def test_wrong_functor_direction(self):
        assert try_compose(c(r"S\NP"), NP, F, 0) is None
        assert try_compose(NP, c("S/NP"), B, 0) is None

    def test_negative_degree_rejected(self):
        with pytest.raises(ValueError):
            try_compose(c("S/NP"), NP, F, -1)

    @given(categories(2), categories(2), st.lists(st.tuples(dirs, categories(1)), max_size=3), dirs)
    def test_template_soundness(self, x, y, zs, d):
        # build both sides of the template symbol by symbol; zs is |n zn ... |1 z1
        secondary = y
        expected = x
        for zd, z in zs:
            secondary = Slash(secondary, zd, z)
            expected = Slash(expected, zd, z)
        n = len(zs)
        if d is F:
            got = try_compose(Slash(x, F, y), secondary, F, n)
        else:
            got = try_compose(secondary, Slash(x, B, y), B, n)
        assert got == expected
        assert got.arity >= n

    @given(categories(3), categories(3), dirs, st.integers(0, 3))
    def test_result_has_enough_arity(self, l, r, d, n):
        out = try_compose(l, r, d, n)
        if out is not None:
            assert out.arity >= n

    @given(categories(3), categories(3))
    def test_degree_zero_is_exact_argument_match(self, l, r):
        fwd = isinstance(l, Slash) and l.dir is F and l.arg == r
        bwd = isinstance(r, Slash) and r.dir is B and r.arg == l
        assert (try_compose(l, r, F, 0) is not None) == fwd
        assert (try_compose(l, r, B, 0) is not None) == bwd


class TestSubstitute:
    def test_forward(self):
        left = c(r"S\NP/NP/NP")
        assert try_substitute(left, c("NP/NP"), F) == c(r"S\NP/NP")

    def test_backward_mirror(self):
        # y|z  x\y|z -> x|z  with x = S\NP, y = NP, z = NP
        right = Slash(Slash(c(r"S\NP"), B, NP), F, NP)
        assert try_substitute(c("NP/NP"), right, B) == c(r"S\NP/NP")

    def test_mismatch(self):
        assert try_substitute(c("A/B"), c("C/B"), F) is None
        assert try_substitute(c("A/C/B"), c("C/B"), F) == c("A/B")

    def test_slash_directions_must_agree(self):
        assert try_substitute(c(r"A/C\B"), c("C/B"), F) is None

    @given(categories(2), categories(2), categories(1), dirs, dirs)
    def test_template(self, x, y, z, d, zd):
        if d is F:
            got = try_substitute(Slash(Slash(x, F, y), zd, z), Slash(y, zd, z), F)
        else:
            got = try_substitute(Slash(y, zd, z), Slash(Slash(x, B, y), zd, z), B)
        assert got == Slash(x, zd, z)


class TestEnumerateRules:
    def test_crossed_modifier_pair(self):
        rules = enumerate_rules(c("S/S"), c(r"S\S"), 1)
        assert [(str(r.kind), str(r.output)) for r in rules] == [(">B1", r"S\S"), ("<B1", "S/S")]
        assert all(r.crossing for r in rules)

    def test_no_functor(self):
        assert enumerate_rules(NP, NP, 3) == []

    def test_only_application(self):
        rules = enumerate_rules(c("S/NP"), NP, 3)
        assert len(rules) == 1 and str(rules[0].kind) == ">B0" and rules[0].output == S

    def test_substitution_only_on_request(self):
        l, r = c("A/C/B"), c("C/B")
        assert enumerate_rules(l, r, 3) == []
        assert [str(x.kind) for x in enumerate_rules(l, r, 3, substitution=True)] == [">S"]

    def test_unbounded_degree(self):
        right = c("B/C/D/E/F")
        assert [x.kind.degree for x in enumerate_rules(c("A/B"), right, None)] == [4]
        assert enumerate_rules(c("A/B"), right, 3) == []

    @given(categories(3), categories(3), st.sampled_from([0, 1, 2, None]), st.booleans())
    def test_no_duplicates_and_sorted(self, l, r, nmax, sub):
        rules = enumerate_rules(l, r, nmax, sub)
        assert len(set(rules)) == len(rules)
        keys = [x.kind.sort_key for x in rules]
        assert keys == sorted(keys)
        for x in rules:
            assert x.left == l and x.right == r
            assert nmax is None or x.kind.substitution or x.kind.degree <= nmax


def test_rule_kind_text():
    for text in (">B0", "<B3", ">S", "<S"):
        assert str(parse_rule_kind(text)) == text
    with pytest.raises(ValueError):
        parse_rule_kind("B2")
    with pytest.raises(ValueError):
        RuleKind(True, F, 2)


def test_attach_inverts_peel():
    cat = c(r"A/B\C/D")
    from nfccg.categories import peel

    core, stripped = peel(cat, 2)
    assert core == c("A/B") and attach(core, stripped) == cat
    assert peel(cat, 4) is None
