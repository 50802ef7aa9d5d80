import random

from hypothesis import given, settings, strategies as st

from nfccg.chart import leaves, parse_exhaustive, parse_nf, recipe_classes
from nfccg.randgen import random_sentence
from nfccg.semantics import App, BoundVar, Lam, beta_normalize, group_into_classes, normal_recipe
from nfccg.sweep import SweepConfig, SweepResult, check_instance, run_sweep

seeds = st.integers(0, 10**6)


def _occurs(t, j):
    if isinstance(t, BoundVar):
        return t.index == j
    if isinstance(t, Lam):
        return _occurs(t.body, j + 1)
    if isinstance(t, App):
        return _occurs(t.fun, j) or _occurs(t.arg, j)
    return False


def _down(t, cutoff=0):
    if isinstance(t, BoundVar):
        return BoundVar(t.index - 1) if t.index > cutoff else t
    if isinstance(t, Lam):
        return Lam(_down(t.body, cutoff + 1))
    if isinstance(t, App):
        return App(_down(t.fun, cutoff), _down(t.arg, cutoff))
    return t


def eta_reduce(t):
    if isinstance(t, App):
        return App(eta_reduce(t.fun), eta_reduce(t.arg))
    if isinstance(t, Lam):
        body = eta_reduce(t.body)
        if isinstance(body, App) and body.arg == BoundVar(0) and not _occurs(body.fun, 0):
            return _down(body.fun)
        return Lam(body)
    return t


def test_eta_reduce_examples():
    from nfccg.semantics import LeafVar, lam, Name

    f = LeafVar(0)
    assert eta_reduce(lam("x", App(f, Name("x")))) == f
    assert eta_reduce(lam("x", App(App(f, Name("x")), Name("x")))) == lam("x", App(App(f, Name("x")), Name("x")))


@settings(max_examples=300)
@given(seeds, st.booleans())
def test_eta_never_merges_beta_classes(seed, substitution):
    rng = random.Random(seed)
    rs = random_sentence(rng, rng.randint(2, 6), substitution=substitution)
    trees = parse_exhaustive(rs.words, rs.grammar).trees(cap=5000)
    beta = {(t.category, tuple(l.category for l in leaves(t)), normal_recipe(t)) for t in trees}
    eta = {(cat, cats, eta_reduce(r)) for cat, cats, r in beta}
    assert len(eta) == len(beta)


@settings(max_examples=200)
@given(seeds, st.booleans())
def test_packed_classes_match_unpacked_grouping(seed, substitution):
    rng = random.Random(seed)
    rs = random_sentence(rng, rng.randint(2, 6), substitution=substitution)
    chart = parse_exhaustive(rs.words, rs.grammar)
    trees = chart.trees(rs.goal, cap=5000)
    sizes = sorted(len(g) for g in group_into_classes(trees))
    assert sorted(recipe_classes(chart, rs.goal).values()) == sizes


@settings(max_examples=200)
@given(seeds, st.booleans())
def test_nf_one_per_class(seed, substitution):
    rng = random.Random(seed)
    rs = random_sentence(rng, rng.randint(3, 7), substitution=substitution)
    E, N = parse_exhaustive(rs.words, rs.grammar), parse_nf(rs.words, rs.grammar)
    ce, cn = recipe_classes(E), recipe_classes(N)
    assert set(ce) == set(cn)
    assert all(v == 1 for v in cn.values())
    assert E.count(rs.goal) >= 1


@settings(max_examples=100)
@given(seeds)
def test_generated_sentences_parse(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 7)
    rs = random_sentence(rng, n)
    assert len(rs.words) == n
    assert parse_exhaustive(rs.words, rs.grammar).count(rs.goal) >= 1
    for w in rs.words:
        cats = rs.grammar.lex_cats(w)
        assert 1 <= len(cats) <= 3 and all(c.depth <= 3 for c in cats)


@settings(max_examples=100)
@given(seeds)
def test_reduction_is_idempotent(seed):
    rng = random.Random(seed)
    rs = random_sentence(rng, rng.randint(2, 5), substitution=True)
    for t in parse_exhaustive(rs.words, rs.grammar).trees(cap=500):
        r = normal_recipe(t)
        assert beta_normalize(r) == r


def test_sweep_is_deterministic():
    a = run_sweep(SweepConfig(instances=20, seed=7))
    b = run_sweep(SweepConfig(instances=20, seed=7))
    assert a.summary() == b.summary() and a.ok


def test_sweep_detects_a_broken_nf_chart(monkeypatch):
    import nfccg.sweep as sweep

    # an "NF" parser that keeps everything must be caught by check (a)
    monkeypatch.setattr(sweep, "parse_nf", sweep.parse_exhaustive)
    rng = random.Random(1)
    res = SweepResult(SweepConfig())
    for i in range(50):
        rs = random_sentence(rng, rng.randint(3, 6))
        check_instance(rs, rng, res, f"#{i}", 0.3, 10_000)
    assert res.violations["a"]
