"""Normal-form CCG parsing without spurious ambiguity."""
from .categories import (
    Atom,
    Dir,
    RuleInstance,
    RuleKind,
    Slash,
    enumerate_rules,
    parse_category,
    print_category,
    try_compose,
    try_substitute,
)
from .grammar import Grammar, LexEntry, RulePolicy, load_lexicon, load_policy, rule_allowed
from .semantics import alpha_equal, beta_normalize, group_into_classes, recipe_of
from .chart import (
    Chart,
    Leaf,
    Node,
    enumerate_trees,
    is_normal_form,
    nf_admissible,
    output_tag,
    parse_exhaustive,
    parse_nf,
    render_tree,
)
from .canonical import NFTable, nf_key_equal, nf_rewrite, parse_canonical

__version__ = "0.1.0"
