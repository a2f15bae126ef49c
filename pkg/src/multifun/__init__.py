"""Finite multifunctions ``V -> P(V)`` and the graph theory built on them."""

from .analysis import (
    INF,
    Bipartition,
    DistanceMatrix,
    bipartition,
    components,
    diameter,
    has_odd_closed_walk,
    is_bipartite_even_iteration,
    is_clique,
    is_connected,
    is_independent,
    metric,
)
from .core import (
    MultiFunction,
    PropertyReport,
    SetOp,
    VertexSet,
    VertexUniverse,
    classify,
    codomain,
    combine,
    complement,
    complement_mf,
    constant_mf,
    domain,
    invert,
    singleton_mf,
)
from .errors import *  # noqa: F401,F403
from .filters import (
    CardBound,
    SetFamily,
    build,
    dual,
    generate_filtr,
    is_cauchy,
    is_filter,
    is_fplus_filter,
    is_ideal,
    is_proper_filter,
    isol,
    leaf_set,
    neigh_card,
    neigh_family,
    wall_card,
    wall_family,
)
from .iterate import closure, compose, power_image, power_image_set, power_preimage, subset_mf
from .primes import (
    ExponentVector,
    PrimeWindow,
    SetDescription,
    factor_exponents,
    prime_divisors,
    prime_leaf,
    prime_minus,
    prime_plus,
    wall_aleph0_contains,
)
from .setops import boundary, image_intersect, image_union, preimage_complete, preimage_small
from .structure import EdgeList, GraphKind, Selection, from_graph, has_selection, multiselection, orient, picture, to_graph
from .walks import EPSILON, WalkQuery, concat, enumerate_walks, is_walk, iter_walks, letter, reverse, tail, walk_exists

__version__ = "0.1.0"
