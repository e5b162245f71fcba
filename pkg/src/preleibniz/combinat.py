"""Shuffles and the box maps that route colors through a colored composition.

Conventions: a (p, q)-shuffle is a permutation ``perm`` of ``1..p+q`` with
``perm[0] < ... < perm[p-1]`` and ``perm[p] < ... < perm[p+q-1]``.  Colors and
positions are 1-based throughout.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations


class _AllColors(enum.Enum):
    ALL = "ALL"

    def __repr__(self) -> str:
        return "ALL"


#: The formal sum [1] + ... + [n] of all colors.
ALL = _AllColors.ALL


@dataclass(frozen=True)
class Shuffle:
    p: int
    q: int
    perm: tuple[int, ...]
    sign: int

    def __call__(self, k: int) -> int:
        return self.perm[k - 1]

    def inverse(self) -> tuple[int, ...]:
        inv = [0] * len(self.perm)
        for pos, val in enumerate(self.perm, start=1):
            inv[val - 1] = pos
        return tuple(inv)


def permutation_sign(perm) -> int:
    """Sign via inversion count (quadratic; arities here are tiny)."""
    inv = sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b])
    return -1 if inv % 2 else 1


@lru_cache(maxsize=None)
def shuffles(p: int, q: int) -> tuple[Shuffle, ...]:
    """All (p, q)-shuffles in lexicographic order of ``perm``."""
    if p < 0 or q < 0:
        raise ValueError("shuffle block sizes must be nonnegative")
    n = p + q
    out = []
    for first in combinations(range(1, n + 1), p):
        chosen = set(first)
        rest = tuple(k for k in range(1, n + 1) if k not in chosen)
        perm = first + rest
        inv = sum(1 for a in first for b in rest if a > b)
        out.append(Shuffle(p, q, perm, -1 if inv % 2 else 1))
    return tuple(out)


def _locate(m: int, i: int, n: int, s: Shuffle, r: int) -> tuple[int, int]:
    """(box, position within box) of color [r] in the layout for (m; i, n, s)."""
    if not 1 <= i <= m:
        raise ValueError(f"insertion slot {i} outside 1..{m}")
    if (s.p, s.q) != (i - 1, n - 1):
        raise ValueError(f"expected a ({i - 1}, {n - 1})-shuffle, got ({s.p}, {s.q})")
    top = m + n - 1
    if not 1 <= r <= top:
        raise ValueError(f"color [{r}] outside 1..{top}")
    last = i + n - 1
    if r == last:
        return i, n
    if r > last:
        return r - n + 1, 1
    pos = s.perm.index(r) + 1
    if pos <= i - 1:
        return pos, 1
    return i, pos - i + 1


def r_map(m: int, i: int, n: int, s: Shuffle, r: int) -> int:
    """The box of [r]: boxes 1..i-1 hold [s(1)]..[s(i-1)], box i holds
    [s(i)], ..., [s(i+n-2)], [i+n-1], and boxes i+1..m hold [i+n]..[m+n-1]."""
    return _locate(m, i, n, s, r)[0]


def s_map(m: int, i: int, n: int, s: Shuffle, r: int):
    """Position of [r] inside box i, or :data:`ALL` when [r] is in another box."""
    box, pos = _locate(m, i, n, s, r)
    return pos if box == i else ALL


def shuffle_with_first(n: int, i: int) -> Shuffle:
    """The (1, n-1)-shuffle of 1..n sending 1 to i."""
    perm = (i,) + tuple(k for k in range(1, n + 1) if k != i)
    return Shuffle(1, n - 1, perm, -1 if (i - 1) % 2 else 1)


def shuffle_moving_last(j: int, i: int) -> Shuffle:
    """The (j-2, 1)-shuffle of 1..j-1 whose last value is i."""
    perm = tuple(k for k in range(1, j) if k != i) + (i,)
    return Shuffle(j - 2, 1, perm, -1 if (j - 1 - i) % 2 else 1)
