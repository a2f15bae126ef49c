"""Vertex universes, vertex sets and multifunctions over a finite universe.

Sets are stored as Python ints used as bitmasks: bit ``v`` is set iff vertex
``v`` is a member.  A multifunction is a tuple of such masks, one per vertex.
All values are immutable.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .errors import UniverseMismatchError, VertexError


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(members: Iterable[int]) -> int:
    mask = 0
    for v in members:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class VertexUniverse:
    """A finite vertex universe ``{0, ..., size-1}``.

    ``names`` is a display table only; two universes of the same size compare
    equal whatever their names.
    """

    size: int
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if not isinstance(self.size, int) or self.size < 1:
            raise ValueError(f"universe size must be a positive integer, got {self.size!r}")
        if self.names is not None:
            object.__setattr__(self, "names", tuple(str(n) for n in self.names))
            if len(self.names) != self.size:
                raise ValueError("name table length differs from universe size")
        # plain attribute rather than a field: derived, and read on hot paths
        object.__setattr__(self, "full_mask", (1 << self.size) - 1)

    @property
    def vertices(self) -> range:
        return range(self.size)

    def name(self, v: int) -> str:
        self.check_vertex(v)
        return self.names[v] if self.names is not None else str(v)

    def check_vertex(self, v: int) -> int:
        if not isinstance(v, int) or not 0 <= v < self.size:
            raise VertexError(f"vertex {v!r} outside universe of size {self.size}")
        return v

    def set(self, members: Iterable[int] = ()) -> VertexSet:
        return VertexSet.of(self, members)

    def empty(self) -> VertexSet:
        return VertexSet(self, 0)

    def full(self) -> VertexSet:
        return VertexSet(self, self.full_mask)

    def subsets(self) -> Iterator[VertexSet]:
        """All subsets of the universe, in increasing mask order."""
        for bits in range(1 << self.size):
            yield VertexSet(self, bits)


@dataclass(frozen=True)
class VertexSet:
    universe: VertexUniverse
    bits: int

    def __post_init__(self):
        if not 0 <= self.bits <= self.universe.full_mask:
            raise VertexError(f"set mask {self.bits:#x} has members outside universe of size {self.universe.size}")

    @classmethod
    def of(cls, universe: VertexUniverse, members: Iterable[int]) -> VertexSet:
        mask = 0
        for v in members:
            mask |= 1 << universe.check_vertex(v)
        return cls(universe, mask)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.bits))

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v) -> bool:
        return isinstance(v, int) and 0 <= v < self.universe.size and bool(self.bits >> v & 1)

    def _other(self, other: VertexSet) -> int:
        if not isinstance(other, VertexSet):
            return NotImplemented
        same_universe(self.universe, other.universe)
        return other.bits

    def __or__(self, other):
        return VertexSet(self.universe, self.bits | self._other(other))

    def __and__(self, other):
        return VertexSet(self.universe, self.bits & self._other(other))

    def __sub__(self, other):
        return VertexSet(self.universe, self.bits & ~self._other(other))

    def __le__(self, other):
        return self.bits & ~self._other(other) == 0

    def __ge__(self, other):
        return self._other(other) & ~self.bits == 0

    def issubset(self, other: VertexSet) -> bool:
        return self <= other

    def complement(self) -> VertexSet:
        return VertexSet(self.universe, self.universe.full_mask & ~self.bits)

    def __repr__(self):
        return "VertexSet({" + ", ".join(map(str, self.members)) + "})"


def complement(s: VertexSet) -> VertexSet:
    """``V - S`` within the set's own universe."""
    return s.complement()


def same_universe(a: VertexUniverse, b: VertexUniverse) -> VertexUniverse:
    if a.size != b.size:
        raise UniverseMismatchError(f"universes of size {a.size} and {b.size} differ")
    return a


@dataclass(frozen=True)
class MultiFunction:
    """A total map ``vertex -> VertexSet`` over a single universe.

    ``rows[v]`` is the bitmask of ``F(v)``.  Calling the object returns the
    image as a :class:`VertexSet`.
    """

    universe: VertexUniverse
    rows: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.universe.size:
            raise ValueError(f"expected {self.universe.size} rows, got {len(rows)}")
        full = self.universe.full_mask
        for v, row in enumerate(rows):
            if not 0 <= row <= full:
                raise VertexError(f"F({v}) has members outside universe of size {self.universe.size}")

    @classmethod
    def from_sets(cls, universe: VertexUniverse, images: Iterable[Iterable[int]]) -> MultiFunction:
        rows = []
        for image in images:
            rows.append(image.bits if isinstance(image, VertexSet) else VertexSet.of(universe, image).bits)
        return cls(universe, tuple(rows))

    @classmethod
    def from_mapping(cls, universe: VertexUniverse, mapping: Mapping[int, Iterable[int]]) -> MultiFunction:
        """Build from a partial mapping; vertices left out map to the empty set."""
        rows = [0] * universe.size
        for v, image in mapping.items():
            rows[universe.check_vertex(v)] = VertexSet.of(universe, image).bits
        return cls(universe, tuple(rows))

    def __call__(self, v: int) -> VertexSet:
        return VertexSet(self.universe, self.rows[self.universe.check_vertex(v)])

    def as_lists(self) -> list[list[int]]:
        return [list(iter_bits(row)) for row in self.rows]

    def __repr__(self):
        body = ", ".join(f"{v}: {{{', '.join(map(str, iter_bits(r)))}}}" for v, r in enumerate(self.rows))
        return f"MultiFunction({{{body}}})"


def check_same(f: MultiFunction, g: MultiFunction) -> None:
    same_universe(f.universe, g.universe)


def check_set(f: MultiFunction, s: VertexSet) -> int:
    same_universe(f.universe, s.universe)
    return s.bits


# -- low-level mask helpers shared by the operator modules --------------------

def union_image_mask(rows: tuple[int, ...], mask: int) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= rows[low.bit_length() - 1]
        mask ^= low
    return out


def inverse_rows(rows: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(rows)
    for x, row in enumerate(rows):
        bit = 1 << x
        for y in iter_bits(row):
            inv[y] |= bit
    return tuple(inv)


# -- the pointwise algebra ----------------------------------------------------

class SetOp(str, enum.Enum):
    UNION = "union"
    INTERSECTION = "intersection"
    DIFFERENCE = "difference"


def invert(f: MultiFunction) -> MultiFunction:
    """``F^{-1}(y) = {x | y in F(x)}``."""
    return MultiFunction(f.universe, inverse_rows(f.rows))


def complement_mf(f: MultiFunction) -> MultiFunction:
    full = f.universe.full_mask
    return MultiFunction(f.universe, tuple(full & ~row for row in f.rows))


def combine(f: MultiFunction, g: MultiFunction, op: SetOp | str) -> MultiFunction:
    check_same(f, g)
    op = SetOp(op)
    if op is SetOp.UNION:
        rows = (a | b for a, b in zip(f.rows, g.rows))
    elif op is SetOp.INTERSECTION:
        rows = (a & b for a, b in zip(f.rows, g.rows))
    else:
        rows = (a & ~b for a, b in zip(f.rows, g.rows))
    return MultiFunction(f.universe, tuple(rows))


def constant_mf(universe: VertexUniverse, s: VertexSet) -> MultiFunction:
    same_universe(universe, s.universe)
    return MultiFunction(universe, (s.bits,) * universe.size)


def singleton_mf(universe: VertexUniverse) -> MultiFunction:
    return MultiFunction(universe, tuple(1 << v for v in universe.vertices))


def domain(f: MultiFunction) -> VertexSet:
    """Vertices with a nonempty image."""
    return VertexSet(f.universe, mask_of(v for v, row in enumerate(f.rows) if row))


def codomain(f: MultiFunction) -> VertexSet:
    out = 0
    for row in f.rows:
        out |= row
    return VertexSet(f.universe, out)


@dataclass(frozen=True)
class PropertyReport:
    strict: bool
    nontrivial: bool
    undirected: bool
    oriented: bool
    total: bool
    everywhereloop: bool
    loopless: bool
    simple_graph: bool
    orgraph: bool
    transitive: bool

    def as_dict(self) -> dict[str, bool]:
        return {name: getattr(self, name) for name in self.__dataclass_fields__}


def classify(f: MultiFunction) -> PropertyReport:
    rows = f.rows
    inv = inverse_rows(rows)
    full = f.universe.full_mask
    loops = [bool(row >> v & 1) for v, row in enumerate(rows)]
    everywhereloop = all(loops)
    loopless = not any(loops)
    undirected = rows == inv
    oriented = all(a & b == 0 for a, b in zip(rows, inv))
    # u in F(v) and v in F(w) => u in F(w), i.e. F_cup(F(w)) within F(w)
    transitive = all(union_image_mask(rows, row) & ~row == 0 for row in rows)
    return PropertyReport(
        strict=all(rows),
        nontrivial=any(rows),
        undirected=undirected,
        oriented=oriented,
        total=all(a | b == full for a, b in zip(rows, inv)),
        everywhereloop=everywhereloop,
        loopless=loopless,
        simple_graph=loopless and undirected,
        orgraph=loopless and oriented,
        transitive=transitive,
    )
