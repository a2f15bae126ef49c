"""Integer powers of a multifunction and the divisibility-indexed closures.

``power_image(F, n)(w)`` is the set of ``u`` with an ``n``-edge walk from ``u``
to ``w``.  Negative exponents iterate the inverse.  ``closure(F, m)`` is the
union of all powers whose exponent is a nonnegative multiple of ``m``; the
zero power is included, so closures are always reflexive.
"""

from __future__ import annotations

from .core import (
    MultiFunction,
    VertexSet,
    check_same,
    check_set,
    inverse_rows,
    singleton_mf,
    union_image_mask,
)
from .errors import ZeroModulusError


def compose(f: MultiFunction, g: MultiFunction) -> MultiFunction:
    """``v -> F_cup(G(v))``."""
    check_same(f, g)
    rows = f.rows
    return MultiFunction(f.universe, tuple(union_image_mask(rows, row) for row in g.rows))


def power_image(f: MultiFunction, n: int) -> MultiFunction:
    if n < 0:
        f = MultiFunction(f.universe, inverse_rows(f.rows))
        n = -n
    result = singleton_mf(f.universe)
    base = f
    # all powers of one multifunction commute, so plain binary exponentiation works
    while n:
        if n & 1:
            result = compose(base, result)
        n >>= 1
        if n:
            base = compose(base, base)
    return result


def power_image_set(f: MultiFunction, n: int, a: VertexSet) -> VertexSet:
    bits = check_set(f, a)
    return VertexSet(f.universe, union_image_mask(power_image(f, n).rows, bits))


def power_preimage(f: MultiFunction, n: int) -> MultiFunction:
    return power_image(MultiFunction(f.universe, inverse_rows(f.rows)), n)


def closure(f: MultiFunction, m: int) -> MultiFunction:
    """Reflexive-transitive closure of ``power_image(F, m)``.

    A negative modulus is the same closure taken over the inverse.
    """
    if m == 0:
        raise ZeroModulusError("closure modulus must be nonzero")
    step = power_image(f, m).rows
    out = []
    for v in f.universe.vertices:
        reached = frontier = 1 << v
        while frontier:
            frontier = union_image_mask(step, frontier) & ~reached
            reached |= frontier
        out.append(reached)
    return MultiFunction(f.universe, tuple(out))


def subset_mf(f: MultiFunction, g: MultiFunction) -> bool:
    """Pointwise containment ``F(v) <= G(v)`` for every vertex."""
    check_same(f, g)
    return all(a & ~b == 0 for a, b in zip(f.rows, g.rows))
