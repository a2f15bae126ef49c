"""Words over the vertex alphabet and walks in a multifunction.

A word ``a`` is a walk of ``n`` edges in ``F`` when it has ``n + 1`` letters
and every letter lies in ``F`` of its successor: ``a[i] in F(a[i+1])``.  This
orientation is the reverse of the usual arc direction; for undirected ``F``
the two readings coincide.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import MultiFunction, inverse_rows, iter_bits, union_image_mask
from .errors import EmptyWordError, EnumerationCapError

Word = tuple[int, ...]

DEFAULT_ENUMERATION_CAP = 12


class _Epsilon:
    __slots__ = ()

    def __repr__(self):
        return "EPSILON"

    def __bool__(self):
        return False


EPSILON = _Epsilon()


def concat(a: Sequence[int], b: Sequence[int]) -> Word:
    return tuple(a) + tuple(b)


def tail(a: Sequence[int]) -> Word:
    """Drop the last letter; the empty word stays empty."""
    return tuple(a[:-1])


def reverse(a: Sequence[int]) -> Word:
    return tuple(reversed(a))


def letter(a: Sequence[int], n: int):
    """The ``n``-th letter (1-based), or ``EPSILON`` past the end."""
    if n < 1:
        raise ValueError("letter positions start at 1")
    return a[n - 1] if n <= len(a) else EPSILON


@dataclass(frozen=True)
class WalkQuery:
    start: int
    end: int
    length: int

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("walk length must be nonnegative")


def is_walk(f: MultiFunction, a: Sequence[int]) -> bool:
    if not a:
        raise EmptyWordError("the empty word is not a walk")
    for v in a:
        f.universe.check_vertex(v)
    rows = f.rows
    return all(rows[a[i + 1]] >> a[i] & 1 for i in range(len(a) - 1))


def _check_query(f: MultiFunction, q: WalkQuery) -> None:
    f.universe.check_vertex(q.start)
    f.universe.check_vertex(q.end)


def iter_walks(f: MultiFunction, q: WalkQuery) -> Iterator[Word]:
    """Lazily yield the walks of ``q`` in lexicographic order (uncapped)."""
    _check_query(f, q)
    # the letter after x must be some y with x in F(y), i.e. y in F^{-1}(x)
    succ = [tuple(iter_bits(row)) for row in inverse_rows(f.rows)]
    n, end = q.length, q.end
    word = [q.start]

    def extend(depth):
        if depth == n:
            if word[-1] == end:
                yield tuple(word)
            return
        for y in succ[word[-1]]:
            word.append(y)
            yield from extend(depth + 1)
            word.pop()

    yield from extend(0)


def enumerate_walks(f: MultiFunction, q: WalkQuery, cap: int = DEFAULT_ENUMERATION_CAP) -> list[Word]:
    """All ``(start, end)`` walks with ``q.length`` edges, lexicographically ordered."""
    if q.length > cap:
        raise EnumerationCapError(f"walk length {q.length} exceeds enumeration cap {cap}")
    return list(iter_walks(f, q))


def walk_exists(f: MultiFunction, q: WalkQuery) -> bool:
    """Decide whether a walk of exactly ``q.length`` edges exists.

    Iterates ``S_k = F_cup(S_{k-1})`` from ``S_0 = {end}``; ``S_k`` is the set of
    vertices with a ``k``-edge walk to ``end``.  The sequence is deterministic
    over finitely many states, so once a state repeats the remaining steps are
    reduced modulo the period.
    """
    _check_query(f, q)
    rows = f.rows
    state = 1 << q.end
    seen = {state: 0}
    history = [state]
    k = 0
    n = q.length
    while k < n:
        state = union_image_mask(rows, state)
        k += 1
        if state in seen:
            first = seen[state]
            period = k - first
            state = history[first + (n - k) % period]
            break
        seen[state] = k
        history.append(state)
    return bool(state >> q.start & 1)
