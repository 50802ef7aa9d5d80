"""Galoot counts under different degree bounds and crossing settings."""
from nfccg.canonical import parse_canonical
from nfccg.chart import parse_exhaustive, parse_nf, recipe_classes
from nfccg.demos import GALOOT_SENTENCE, galoot_grammar
from nfccg.grammar import RulePolicy

for crossing in (True, False):
    for deg in (0, 1, 2, 3, None):
        g = galoot_grammar(RulePolicy(deg, crossing))
        E = parse_exhaustive(GALOOT_SENTENCE, g)
        sizes = sorted(recipe_classes(E, g.target).values(), reverse=True)
        nf = parse_nf(GALOOT_SENTENCE, g).count(g.target)
        can = len(parse_canonical(GALOOT_SENTENCE, g).parses())
        print(f"crossing={crossing!s:5} max_degree={deg!s:4} total={E.count(g.target):4} sizes={sizes} nf={nf} canonical={can}")
