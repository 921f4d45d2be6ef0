"""Containment and equivalence deciders for observation-algebra terms.

Observations over a coherence graph are downclosed sets of cliques ordered by
reverse inclusion; they form a Heyting algebra.  This package provides term
syntax for that algebra, decision procedures specialized per graph kind
(finite, infinite anticlique, product), and an independent brute-force oracle
used to cross-validate every engine.
"""

from .anticlique import (
    AnticliqueRepr,
    BOT_REPR,
    TOP_REPR,
    ac_leq,
    cofin,
    fin,
    repr_and,
    repr_impl,
    repr_leq,
    repr_or,
    to_representative,
    to_term,
)
from .cliques import (
    Clique,
    CliqueFamily,
    find_incompatibility,
    format_clique,
    format_family,
    generator_leq,
    is_clique,
    minimal_generators,
    more_specific,
)
from .errors import (
    BudgetExceededError,
    GraphFormatError,
    ObskitError,
    TermSyntaxError,
    UnknownAtomError,
    UnsupportedOperationError,
)
from .fan import clique_negation, fan_leq, implication_to_lattice, to_lattice_term
from .graph import (
    AnticliqueGraph,
    CoherenceGraph,
    FiniteGraph,
    ProductGraph,
    anticlique_graph,
    finite_graph,
    graph_from_obj,
    join_atom,
    load_graph,
    product_graph,
    split_atom,
)
from .lattice import Bracket, bracket, dnf, filter_cliques, lat_leq, triangle_leq
from .oracle import (
    SemSet,
    ac_oracle_leq,
    anticlique_model,
    down_close,
    enum_cliques,
    eval_term,
    format_semset,
    is_downclosed,
    oracle_leq,
)
from .product import (
    ComponentEngine,
    Representative,
    TermVector,
    ZERO_VECTOR,
    conj_to_disj,
    conjunctive_rep,
    coprod_term,
    disj_to_conj,
    disjunctive_rep,
    engines_for,
    format_representative,
    inject,
    prod_leq,
    prod_term,
    vec_and,
    vec_impl,
    vec_or,
    vector,
)
from .terms import (
    And,
    Atom,
    BOT,
    Bot,
    Impl,
    Or,
    TOP,
    Term,
    Top,
    atoms_of,
    big_and,
    big_or,
    is_lattice_term,
    parse_term,
    print_term,
)

__version__ = "0.1.0"
