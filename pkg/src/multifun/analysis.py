"""Independent sets, cliques, connectedness, bipartiteness and the walk metric.

Cliques follow the literal ordered-pair rule ``u in F(w)`` for *all*
``u, w in U``, including ``u == w``.  A loopless multifunction therefore has
no nonempty clique; only reflexive relations such as closures do.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .core import MultiFunction, VertexSet, VertexUniverse, check_set, classify, iter_bits, union_image_mask
from .errors import NotUndirectedError, PreconditionError
from .iterate import closure


@functools.total_ordering
class _Infinity:
    """Distance between vertices in different components."""

    __slots__ = ()

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("multifun.INF")

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __add__(self, other):
        if isinstance(other, int) or other is self:
            return self
        return NotImplemented

    __radd__ = __add__


INF = _Infinity()


@dataclass(frozen=True)
class Bipartition:
    U: VertexSet
    W: VertexSet

    def __post_init__(self):
        if not self.U or not self.W:
            raise ValueError("both sides of a bipartition must be nonempty")
        if self.U & self.W:
            raise ValueError("bipartition sides overlap")
        if (self.U | self.W).bits != self.U.universe.full_mask:
            raise ValueError("bipartition sides do not cover the universe")


@dataclass(frozen=True)
class DistanceMatrix:
    universe: VertexUniverse
    entries: tuple[tuple, ...]

    def __call__(self, u: int, w: int):
        return self.entries[u][w]

    def as_lists(self) -> list[list]:
        return [list(row) for row in self.entries]


def is_independent(f: MultiFunction, u: VertexSet) -> bool:
    bits = check_set(f, u)
    return all(f.rows[w] & bits == 0 for w in iter_bits(bits))


def is_clique(f: MultiFunction, u: VertexSet) -> bool:
    bits = check_set(f, u)
    return all(bits & ~f.rows[w] == 0 for w in iter_bits(bits))


def is_connected(f: MultiFunction) -> bool:
    full = f.universe.full_mask
    return all(row == full for row in closure(f, 1).rows)


def _require_undirected(f: MultiFunction, what: str) -> None:
    if not classify(f).undirected:
        raise NotUndirectedError(f"{what} needs an undirected multifunction")


def components(f: MultiFunction) -> list[VertexSet]:
    """Connected components, ordered by smallest member."""
    _require_undirected(f, "components")
    reach = closure(f, 1).rows
    seen = 0
    out = []
    for v in f.universe.vertices:
        if not seen >> v & 1:
            out.append(VertexSet(f.universe, reach[v]))
            seen |= reach[v]
    return out


def _require_strict_simple(f: MultiFunction, what: str) -> None:
    report = classify(f)
    if not (report.simple_graph and report.strict):
        raise PreconditionError(f"{what} needs a strict simple graph multifunction")


def bipartition(f: MultiFunction) -> Bipartition | None:
    """A bipartition built from even-walk closures, or ``None``.

    In each component the side of its smallest vertex ``v`` is
    ``closure(F, 2)(v)``; the other side is the rest of the component.
    """
    _require_strict_simple(f, "bipartition")
    even = closure(f, 2).rows
    u_bits = w_bits = 0
    for comp in components(f):
        side = even[comp.members[0]]
        u_bits |= side
        w_bits |= comp.bits & ~side
    universe = f.universe
    if not w_bits:
        return None
    u_set, w_set = VertexSet(universe, u_bits), VertexSet(universe, w_bits)
    if not (is_independent(f, u_set) and is_independent(f, w_set)):
        return None
    return Bipartition(u_set, w_set)


def is_bipartite_even_iteration(f: MultiFunction) -> bool:
    """Bipartite iff the square is disconnected on every component.

    ``F^2`` restricted to a component ``C`` is connected exactly when ``C`` is a
    clique of ``closure(F, 2)``.
    """
    _require_strict_simple(f, "even-iteration test")
    even = closure(f, 2)
    return all(not is_clique(even, comp) for comp in components(f))


def has_odd_closed_walk(f: MultiFunction, v: int) -> bool:
    """Whether some closed walk at ``v`` has an odd number of edges.

    Only lengths up to ``3 |V|`` are inspected: a reachable odd cycle has at
    most ``|V|`` edges and lies at distance below ``|V|`` from ``v``.
    """
    _require_undirected(f, "odd closed walk search")
    f.universe.check_vertex(v)
    rows = f.rows
    state = 1 << v
    for n in range(1, 3 * f.universe.size + 1):
        state = union_image_mask(rows, state)
        if n & 1 and state >> v & 1:
            return True
    return False


def _distances_from(rows, w: int, size: int) -> list:
    dist = [INF] * size
    dist[w] = 0
    reached = frontier = 1 << w
    n = 0
    while frontier:
        n += 1
        frontier = union_image_mask(rows, frontier) & ~reached
        reached |= frontier
        for u in iter_bits(frontier):
            dist[u] = n
    return dist


def metric(f: MultiFunction) -> DistanceMatrix:
    """``d(u, w)``: least ``n`` with ``u in F^n(w)``, or ``INF``."""
    if not classify(f).simple_graph:
        raise PreconditionError("the walk metric needs a simple graph multifunction")
    size = f.universe.size
    by_target = [_distances_from(f.rows, w, size) for w in range(size)]
    entries = tuple(tuple(by_target[w][u] for w in range(size)) for u in range(size))
    return DistanceMatrix(f.universe, entries)


def diameter(f: MultiFunction, m: VertexSet):
    """Largest distance between members of ``M``; 0 when ``|M| <= 1``."""
    bits = check_set(f, m)
    if not classify(f).simple_graph:
        raise PreconditionError("diameter needs a simple graph multifunction")
    best = 0
    size = f.universe.size
    for w in iter_bits(bits):
        dist = _distances_from(f.rows, w, size)
        for u in iter_bits(bits):
            if dist[u] > best:
                best = dist[u]
    return best
