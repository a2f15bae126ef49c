"""Graphs as multifunctions: neighbourhoods, edge extraction and selections."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Mapping

from .core import MultiFunction, VertexUniverse, combine, inverse_rows, iter_bits
from .errors import (
    IncompleteSelectionError,
    KindViolationError,
    NotUndirectedError,
    UniverseMismatchError,
    VertexError,
)


class GraphKind(str, enum.Enum):
    SIMPLE = "simple"
    UNDIRECTED = "undirected"
    EVERYWHERELOOP_UNDIRECTED = "everywhereloop_undirected"
    DIGRAPH = "digraph"
    SIMPLE_DIGRAPH = "simple_digraph"
    EVERYWHERELOOP_DIGRAPH = "everywhereloop_digraph"
    ORGRAPH = "orgraph"

    @property
    def directed(self) -> bool:
        return self in _DIRECTED_KINDS


_DIRECTED_KINDS = {GraphKind.DIGRAPH, GraphKind.SIMPLE_DIGRAPH, GraphKind.EVERYWHERELOOP_DIGRAPH, GraphKind.ORGRAPH}


@dataclass(frozen=True)
class EdgeList:
    """Edges over a universe.

    Directed edges are arcs ``(tail, head)``.  Undirected edges are stored once,
    smaller endpoint first.  Duplicates are kept as given so that
    :func:`from_graph` can reject them.
    """

    universe: VertexUniverse
    directed: bool
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        norm = []
        for u, v in self.edges:
            self.universe.check_vertex(u)
            self.universe.check_vertex(v)
            if not self.directed and u > v:
                u, v = v, u
            norm.append((u, v))
        object.__setattr__(self, "edges", tuple(norm))

    @classmethod
    def of(cls, size: int, edges: Iterable[tuple[int, int]], directed: bool = False) -> EdgeList:
        return cls(VertexUniverse(size), directed, tuple(edges))


def from_graph(g: EdgeList, kind: GraphKind | str) -> MultiFunction:
    """Neighbourhood multifunction of ``g``.

    Undirected kinds give ``N(v) = {u | {u, v} in E}``; directed kinds give the
    out-neighbourhood ``N+(v) = {u | (v, u) in E}`` (its inverse is the
    in-neighbourhood).
    """
    kind = GraphKind(kind)
    if kind.directed != g.directed:
        raise KindViolationError(f"{kind.value} needs a {'directed' if kind.directed else 'undirected'} edge list")
    if len(set(g.edges)) != len(g.edges):
        raise KindViolationError("duplicate edge")
    size = g.universe.size
    rows = [0] * size
    loops = 0
    for u, v in g.edges:
        if u == v:
            loops |= 1 << u
        rows[u] |= 1 << v
        if not g.directed:
            rows[v] |= 1 << u
    if loops and kind in (GraphKind.SIMPLE, GraphKind.SIMPLE_DIGRAPH, GraphKind.ORGRAPH):
        raise KindViolationError(f"loop at vertex {next(iter_bits(loops))} is not allowed in a {kind.value} graph")
    if kind in (GraphKind.EVERYWHERELOOP_UNDIRECTED, GraphKind.EVERYWHERELOOP_DIGRAPH) and loops != g.universe.full_mask:
        missing = next(iter_bits(g.universe.full_mask & ~loops))
        raise KindViolationError(f"vertex {missing} lacks a loop")
    if kind is GraphKind.ORGRAPH:
        arcs = set(g.edges)
        for u, v in g.edges:
            if (v, u) in arcs:
                raise KindViolationError(f"arcs ({u}, {v}) and ({v}, {u}) both present in an orgraph")
    return MultiFunction(g.universe, tuple(rows))


def picture(f: MultiFunction) -> frozenset[tuple[int, int]]:
    """The relation ``{(u, v) | u in F(v)}``."""
    return frozenset((u, v) for v, row in enumerate(f.rows) for u in iter_bits(row))


def to_graph(f: MultiFunction, directed: bool) -> EdgeList:
    """Edge list whose neighbourhood multifunction is ``F``.

    Directed output lists the arc ``(v, u)`` for every ``u in F(v)``, so
    ``from_graph(to_graph(F, True), "digraph") == F``.  Undirected output
    requires ``F`` to be undirected and lists each pair once.
    """
    if directed:
        edges = tuple((v, u) for v, row in enumerate(f.rows) for u in iter_bits(row))
        return EdgeList(f.universe, True, edges)
    if f.rows != inverse_rows(f.rows):
        raise NotUndirectedError("undirected edge extraction needs F equal to its inverse")
    edges = tuple((u, v) for v, row in enumerate(f.rows) for u in iter_bits(row) if u <= v)
    return EdgeList(f.universe, False, tuple(sorted(edges)))


@dataclass(frozen=True)
class Selection:
    """A choice of one endpoint for each unordered pair of distinct vertices."""

    chooser: Mapping[frozenset, int]

    def __post_init__(self):
        for pair, chosen in self.chooser.items():
            if len(pair) != 2 or chosen not in pair:
                raise ValueError(f"selection picks {chosen!r} from {set(pair)!r}")

    def __call__(self, u: int, v: int) -> int:
        return self.chooser[frozenset((u, v))]

    @classmethod
    def min_picker(cls, universe: VertexUniverse) -> Selection:
        return cls({frozenset(p): min(p) for p in combinations(universe.vertices, 2)})

    @classmethod
    def max_picker(cls, universe: VertexUniverse) -> Selection:
        return cls({frozenset(p): max(p) for p in combinations(universe.vertices, 2)})


def multiselection(s: Selection, universe: VertexUniverse) -> MultiFunction:
    """``v -> {u | s({u, v}) = v}``."""
    rows = [0] * universe.size
    for u, v in combinations(universe.vertices, 2):
        try:
            chosen = s(u, v)
        except KeyError:
            raise IncompleteSelectionError(f"selection has no choice for {{{u}, {v}}}") from None
        if chosen == v:
            rows[v] |= 1 << u
        else:
            rows[u] |= 1 << v
    for pair in s.chooser:
        for x in pair:
            if not 0 <= x < universe.size:
                raise VertexError(f"selection mentions vertex {x} outside universe of size {universe.size}")
    return MultiFunction(universe, tuple(rows))


def orient(f: MultiFunction, s: Selection) -> MultiFunction:
    """``F`` intersected with the multiselection of ``s``.

    The selection must cover exactly the pairs of ``F``'s universe.
    """
    if set(s.chooser) != {frozenset(p) for p in combinations(f.universe.vertices, 2)}:
        raise UniverseMismatchError("selection is defined over a different universe")
    return combine(f, multiselection(s, f.universe), "intersection")


def has_selection(f: MultiFunction) -> bool:
    """Whether the product of all images ``F(v)`` is nonempty."""
    return next(product(*(iter_bits(row) for row in f.rows)), None) is not None
