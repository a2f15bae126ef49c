"""Image and preimage operators of a multifunction, plus the boundary operator.

On a finite universe ``boundary(F, V)`` is always empty, so every
multifunction is amenable; no separate predicate is provided for that.
"""

from __future__ import annotations

from .core import MultiFunction, VertexSet, check_set, iter_bits, union_image_mask
from .errors import EmptyArgumentError


def image_union(f: MultiFunction, a: VertexSet) -> VertexSet:
    """Union of ``F(x)`` over ``x`` in ``A``."""
    return VertexSet(f.universe, union_image_mask(f.rows, check_set(f, a)))


def image_intersect(f: MultiFunction, a: VertexSet) -> VertexSet:
    """Intersection of ``F(x)`` over ``x`` in ``A``; ``A`` must be nonempty."""
    bits = check_set(f, a)
    if not bits:
        raise EmptyArgumentError("intersection image is undefined on the empty set")
    out = f.universe.full_mask
    for x in iter_bits(bits):
        out &= f.rows[x]
    return VertexSet(f.universe, out)


def preimage_complete(f: MultiFunction, b: VertexSet) -> VertexSet:
    """Vertices whose image meets ``B``."""
    bits = check_set(f, b)
    out = 0
    for x, row in enumerate(f.rows):
        if row & bits:
            out |= 1 << x
    return VertexSet(f.universe, out)


def preimage_small(f: MultiFunction, b: VertexSet) -> VertexSet:
    """Vertices whose image lies inside ``B``."""
    bits = check_set(f, b)
    out = 0
    for x, row in enumerate(f.rows):
        if row & ~bits == 0:
            out |= 1 << x
    return VertexSet(f.universe, out)


def boundary(f: MultiFunction, w: VertexSet) -> VertexSet:
    """Members of ``W`` with a neighbour outside ``W``."""
    check_set(f, w)
    return w & preimage_complete(f, w.complement())
