"""Matroids as explicit basis families, with expansion and contraction functors.

Quick start::

    from matroid_functors import uniform, expand_family, contract, te_check

    U = uniform(2, 3)
    P = expand_family(U, (2, 1, 1))      # a partition matroid on x1.1 x1.2 x2.1 x3.1
    contract(P).contracted               # back to U_{2,3}
    te_check(U, 1, 2).status             # 'holds_at_m'
"""

from .core import (
    Family,
    Matroid,
    MatroidError,
    NotAMatroidError,
    add_coloop,
    circuits,
    direct_sum,
    is_antichain,
    is_isomorphic,
    is_matroid,
    matroids_isomorphic,
    rank,
    relabel,
    restriction,
)
from .exchange import (
    BasisSequence,
    Permutation,
    SubsetExchange,
    SymmetricExchange,
    TEVerdict,
    WhiteReport,
    apply_move,
    compatible,
    exchange_candidates,
    lift_sequence,
    project_sequence,
    subset_exchange_candidates,
    te1_via_lemma,
    te_check,
    uniform_swap_chain,
    white_report,
)
from .families import (
    MultiGraph,
    SetSystem,
    copy_partition,
    expand_graph,
    expand_presentation,
    graphic_matroid,
    has_transversal,
    is_binary,
    max_matching,
    partition_matroid,
    transversal_matroid,
    uniform,
)
from .formats import Document, ParseError, parse, serialize
from .functors import (
    ContractionResult,
    ExpansionVector,
    contract,
    copy_labels,
    expand_family,
    expand_set,
    is_contracted,
    project,
    projection_map,
)
from .labels import Label

__version__ = "0.1.0"
