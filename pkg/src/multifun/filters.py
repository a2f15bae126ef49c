"""Set families indexed by a multifunction: neighbour ideals, wall filters and friends.

Families are explicit, so anything built by scanning the powerset refuses
universes larger than ``DEFAULT_FAMILY_CAP`` vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .analysis import diameter
from .core import MultiFunction, VertexSet, VertexUniverse, check_set, classify, iter_bits, same_universe, union_image_mask
from .errors import EmptyFamilyError, EnumerationCapError, PreconditionError

DEFAULT_FAMILY_CAP = 16


def _canonical_key(mask: int) -> tuple[int, tuple[int, ...]]:
    return mask.bit_count(), tuple(iter_bits(mask))


@lru_cache(maxsize=None)
def _canonical_order(size: int) -> tuple[tuple[int, ...], dict[int, int]]:
    order = tuple(sorted(range(1 << size), key=_canonical_key))
    return order, {m: i for i, m in enumerate(order)}


class SetFamily:
    """A finite family of subsets, kept in canonical order (size, then members).

    Treated as immutable; equality compares the universe size and the members.
    """

    __slots__ = ("universe", "masks", "_set")

    def __init__(self, universe: VertexUniverse, masks: Iterable[int]):
        present = frozenset(masks)
        if present and (min(present) < 0 or max(present) > universe.full_mask):
            raise ValueError(f"family members do not fit a universe of size {universe.size}")
        if universe.size <= DEFAULT_FAMILY_CAP:
            key = _canonical_order(universe.size)[1].__getitem__
        else:
            key = _canonical_key
        self.universe = universe
        self.masks = tuple(sorted(present, key=key))
        self._set = present

    @classmethod
    def _ordered(cls, universe: VertexUniverse, masks: tuple[int, ...]) -> SetFamily:
        """Wrap masks already in canonical order."""
        fam = object.__new__(cls)
        fam.universe = universe
        fam.masks = masks
        fam._set = None
        return fam

    @property
    def _present(self) -> frozenset[int]:
        if self._set is None:
            self._set = frozenset(self.masks)
        return self._set

    def __eq__(self, other):
        if not isinstance(other, SetFamily):
            return NotImplemented
        return self.masks == other.masks and self.universe.size == other.universe.size

    def __hash__(self):
        return hash((self.universe.size, self.masks))

    @classmethod
    def of(cls, universe: VertexUniverse, members: Iterable[VertexSet | Iterable[int]]) -> SetFamily:
        masks = []
        for m in members:
            if isinstance(m, VertexSet):
                same_universe(universe, m.universe)
                masks.append(m.bits)
            else:
                masks.append(universe.set(m).bits)
        return cls(universe, masks)

    @property
    def members(self) -> tuple[VertexSet, ...]:
        return tuple(VertexSet(self.universe, m) for m in self.masks)

    def __iter__(self) -> Iterator[VertexSet]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.masks)

    def __contains__(self, item) -> bool:
        bits = item.bits if isinstance(item, VertexSet) else item
        return bits in self._present

    def issubset(self, other: SetFamily) -> bool:
        return self._present <= other._present

    def as_lists(self) -> list[list[int]]:
        return [list(iter_bits(m)) for m in self.masks]

    def __repr__(self):
        inner = ", ".join("{" + ", ".join(map(str, iter_bits(m))) + "}" for m in self.masks)
        return f"SetFamily([{inner}])"


@dataclass(frozen=True)
class CardBound:
    """``finite(k)`` or ``unbounded``; membership tests compare ``count < k``."""

    k: int | None = None

    def __post_init__(self):
        if self.k is not None and self.k < 0:
            raise ValueError("cardinal bound must be nonnegative")

    @classmethod
    def finite(cls, k: int) -> CardBound:
        return cls(k)

    @classmethod
    def unbounded(cls) -> CardBound:
        return cls(None)

    def admits(self, count: int) -> bool:
        return self.k is None or count < self.k


def _check_cap(universe: VertexUniverse, cap: int) -> None:
    if universe.size > cap:
        raise EnumerationCapError(f"universe of size {universe.size} exceeds family cap {cap}")


@lru_cache(maxsize=16)
def _preimage_tables(rows: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """``F_-(U)`` and ``F_+(U)`` for every ``U``, indexed by mask."""
    size = len(rows)
    complete = [0] * (1 << size)
    small = [0] * (1 << size)
    for x, row in enumerate(rows):
        bit = 1 << x
        for u in range(1 << size):
            if row & u:
                complete[u] |= bit
            if row & ~u == 0:
                small[u] |= bit
    return tuple(complete), tuple(small)


def _tables(f: MultiFunction, cap: int):
    """Canonical subset order plus the two preimage tables."""
    _check_cap(f.universe, cap)
    return (_canonical_order(f.universe.size)[0],) + _preimage_tables(f.rows)


@lru_cache(maxsize=4096)
def _below(size: int, top: int) -> tuple[int, ...]:
    """Subsets of ``top`` in canonical order."""
    return tuple(u for u in _canonical_order(size)[0] if u & ~top == 0)


@lru_cache(maxsize=4096)
def _above(size: int, bottom: int) -> tuple[int, ...]:
    """Supersets of ``bottom`` in canonical order."""
    return tuple(u for u in _canonical_order(size)[0] if bottom & ~u == 0)


def neigh_family(f: MultiFunction, a: VertexSet, cap: int = DEFAULT_FAMILY_CAP) -> SetFamily:
    """``{U | F_-(U) <= A}``.

    ``F_-(U)`` meets the outside of ``A`` exactly when ``U`` meets
    ``F(V - A)``, so this is the powerset of ``V - F(V - A)``.
    """
    full = f.universe.full_mask
    outside = full & ~check_set(f, a)
    _check_cap(f.universe, cap)
    return SetFamily._ordered(f.universe, _below(f.universe.size, full & ~union_image_mask(f.rows, outside)))


def wall_family(f: MultiFunction, a: VertexSet, cap: int = DEFAULT_FAMILY_CAP) -> SetFamily:
    """``{U | A <= F_+(U)}``, i.e. the supersets of ``F(A)``."""
    bits = check_set(f, a)
    _check_cap(f.universe, cap)
    return SetFamily._ordered(f.universe, _above(f.universe.size, union_image_mask(f.rows, bits)))


def neigh_card(f: MultiFunction, k: CardBound, cap: int = DEFAULT_FAMILY_CAP) -> SetFamily:
    order, complete, _ = _tables(f, cap)
    return SetFamily._ordered(f.universe, tuple(u for u in order if k.admits(complete[u].bit_count())))


def wall_card(f: MultiFunction, k: CardBound, cap: int = DEFAULT_FAMILY_CAP) -> SetFamily:
    size = f.universe.size
    order, _, small = _tables(f, cap)
    return SetFamily._ordered(f.universe, tuple(u for u in order if k.admits(size - small[u].bit_count())))


def isol(f: MultiFunction, cap: int = DEFAULT_FAMILY_CAP) -> SetFamily:
    return neigh_family(f, f.universe.empty(), cap)


def build(f: MultiFunction, cap: int = DEFAULT_FAMILY_CAP) -> SetFamily:
    return wall_family(f, f.universe.full(), cap)


def dual(fam: SetFamily) -> SetFamily:
    # complementation reverses the canonical (size, lexicographic) order
    full = fam.universe.full_mask
    return SetFamily._ordered(fam.universe, tuple(map(full.__xor__, reversed(fam.masks))))


def _require_nonempty(fam: SetFamily) -> None:
    if not fam.masks:
        raise EmptyFamilyError("the family is empty")


# On a finite universe a nonempty ideal is the powerset of its union and a
# nonempty filter is the set of supersets of its intersection, so counting
# members decides both.


def is_ideal(fam: SetFamily) -> bool:
    _require_nonempty(fam)
    top = 0
    for m in fam.masks:
        top |= m
    return len(fam.masks) == 1 << top.bit_count()


def is_filter(fam: SetFamily) -> bool:
    _require_nonempty(fam)
    bottom = fam.universe.full_mask
    for m in fam.masks:
        bottom &= m
    return len(fam.masks) == 1 << (fam.universe.size - bottom.bit_count())


def is_proper_filter(fam: SetFamily) -> bool:
    return is_filter(fam) and 0 not in fam


def is_fplus_filter(f: MultiFunction, fam: SetFamily, cap: int = DEFAULT_FAMILY_CAP) -> bool:
    """Closed under intersection and under ``U <= F_+(W) => W`` for members ``U``."""
    _require_nonempty(fam)
    same_universe(f.universe, fam.universe)
    present = fam._present
    masks = fam.masks
    for i, a in enumerate(masks):
        for b in masks[i + 1 :]:
            if a & b not in present:
                return False
    # intersection-closed, so the least member witnesses every upward step
    least = f.universe.full_mask
    for m in masks:
        least &= m
    _, _, small = _tables(f, cap)
    return all(w in present for w, pre in enumerate(small) if least & ~pre == 0)


def generate_filtr(f: MultiFunction, gens: SetFamily, cap: int = DEFAULT_FAMILY_CAP) -> SetFamily:
    """``{U | A_1 & ... & A_n <= F_+(U)}`` over finite nonempty choices of generators.

    With no generators there is no witness, so the result is empty.
    """
    same_universe(f.universe, gens.universe)
    _check_cap(f.universe, cap)
    if not gens.masks:
        return SetFamily._ordered(f.universe, ())
    # every finite intersection contains the intersection of all generators,
    # which is itself one of them, so it is the only witness worth testing
    least = f.universe.full_mask
    for m in gens.masks:
        least &= m
    return SetFamily._ordered(f.universe, _above(f.universe.size, union_image_mask(f.rows, least)))


def leaf_set(f: MultiFunction, v: int) -> VertexSet:
    """``{w | F(w) = {v}}``."""
    f.universe.check_vertex(v)
    target = 1 << v
    return VertexSet(f.universe, sum(1 << w for w, row in enumerate(f.rows) if row == target))


def is_cauchy(f: MultiFunction, fam: SetFamily) -> bool:
    """Some member has diameter below every positive bound, i.e. diameter 0."""
    if not classify(f).simple_graph:
        raise PreconditionError("Cauchy check needs a simple graph multifunction")
    _require_nonempty(fam)
    return any(diameter(f, VertexSet(f.universe, m)) == 0 for m in fam.masks)

