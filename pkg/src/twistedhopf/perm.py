"""Permutations in one-line notation and the combinatorics operads need.

A permutation of ``[n] = {1, ..., n}`` is a tuple ``(s(1), ..., s(n))`` of
1-based integers.  The empty tuple is the unique element of ``S_0``.

Products follow ``multiply(s, t)(i) == s(t(i))``; the right action of ``S_n``
on the associative operad is ``m . s == multiply(m, s)``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

Permutation = tuple[int, ...]


class PermutationError(ValueError):
    """Invalid permutation input (bad entries, lengths or indices)."""


def is_permutation(seq: Sequence[int]) -> bool:
    return sorted(seq) == list(range(1, len(seq) + 1))


def as_permutation(seq: Iterable[int]) -> Permutation:
    p = tuple(int(x) for x in seq)
    if not is_permutation(p):
        raise PermutationError(f"{list(p)} is not a permutation of 1..{len(p)}")
    return p


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def standardize(seq: Sequence[int]) -> Permutation:
    """Replace distinct integers by ``1..p`` keeping their relative order.

    >>> standardize((3, 2, 1, 8, 7, 5, 4))
    (3, 2, 1, 7, 6, 5, 4)
    """
    if len(set(seq)) != len(seq):
        raise PermutationError(f"standardize needs distinct entries, got {list(seq)}")
    rank = {v: r for r, v in enumerate(sorted(seq), 1)}
    return tuple(rank[v] for v in seq)


def multiply(s: Permutation, t: Permutation) -> Permutation:
    if len(s) != len(t):
        raise PermutationError(f"length mismatch: {len(s)} vs {len(t)}")
    return tuple(s[x - 1] for x in t)


def invert(s: Permutation) -> Permutation:
    out = [0] * len(s)
    for i, x in enumerate(s, 1):
        out[x - 1] = i
    return tuple(out)


def partial_compose(s: Permutation, i: int, t: Permutation) -> Permutation:
    """Operadic ``s o_i t``: the value ``s(i)`` is replaced by a shifted block ``t``.

    >>> partial_compose((3, 4, 2, 5, 1), 2, (1, 2, 3))
    (3, 4, 5, 6, 2, 7, 1)
    """
    n, m = len(s), len(t)
    if not 1 <= i <= n:
        raise PermutationError(f"slot {i} out of range 1..{n}")
    v = s[i - 1]
    out: list[int] = []
    for j, x in enumerate(s, 1):
        if j == i:
            out.extend(y + v - 1 for y in t)
        else:
            out.append(x if x < v else x + m - 1)
    return tuple(out)


def block_permutation(s: Permutation, lengths: Sequence[int]) -> Permutation:
    """Replace ``s(i)`` by an identity block of length ``lengths[i]``.

    >>> block_permutation((2, 3, 1), [1, 2, 2])
    (3, 4, 5, 1, 2)
    """
    k = len(s)
    if len(lengths) != k:
        raise PermutationError(f"need {k} block lengths, got {len(lengths)}")
    if any(l < 0 for l in lengths):
        raise PermutationError("block lengths must be non-negative")
    inv = invert(s)
    # start[v] = total length of the blocks whose value is below v
    start = [0] * (k + 2)
    for v in range(1, k + 1):
        start[v + 1] = start[v] + lengths[inv[v - 1] - 1]
    out: list[int] = []
    for i in range(k):
        base = start[s[i]]
        out.extend(range(base + 1, base + lengths[i] + 1))
    return tuple(out)


def check_subset(n: int, subset: Iterable[int]) -> tuple[int, ...]:
    members = tuple(sorted(subset))
    if len(set(members)) != len(members) or any(not 1 <= x <= n for x in members):
        raise PermutationError(f"{list(members)} is not a subset of [1..{n}]")
    return members


def restrict(s: Permutation, subset: Iterable[int]) -> Permutation:
    """Standardization of the values of ``s`` at the positions in ``subset``."""
    members = check_subset(len(s), subset)
    return standardize([s[x - 1] for x in members])


def delta_i(s: Permutation, i: int) -> Permutation:
    """Degeneracy: delete position ``i`` and standardize."""
    if not 1 <= i <= len(s):
        raise PermutationError(f"degeneracy index {i} out of range 1..{len(s)}")
    return standardize(s[: i - 1] + s[i:])


def direct_sum(s: Permutation, t: Permutation) -> Permutation:
    p = len(s)
    return tuple(s) + tuple(x + p for x in t)


def zeta(p: int, q: int) -> Permutation:
    """The block swap ``(q+1, ..., q+p, 1, ..., q)``."""
    return tuple(range(q + 1, q + p + 1)) + tuple(range(1, q + 1))


def sigma_st(S: Iterable[int], T: Iterable[int]) -> Permutation:
    """Sorted ``S`` followed by sorted ``T``; they must partition ``[n]``."""
    s, t = sorted(S), sorted(T)
    n = len(s) + len(t)
    if sorted(s + t) != list(range(1, n + 1)):
        raise PermutationError(f"{s} and {t} do not partition [1..{n}]")
    return tuple(s + t)


def is_shuffle(a: Permutation, arities: Sequence[int]) -> bool:
    """True iff ``invert(a)`` is a concatenation of increasing runs of the given lengths."""
    inv = invert(a)
    pos = 0
    for length in arities:
        run = inv[pos : pos + length]
        if any(run[j] > run[j + 1] for j in range(len(run) - 1)):
            return False
        pos += length
    return pos == len(a)


@lru_cache(maxsize=None)
def enumerate_shuffles(p: int, q: int) -> tuple[Permutation, ...]:
    """All ``(p, q)``-shuffles, ordered lexicographically by the increasing halves."""
    n = p + q
    out = []
    for left in combinations(range(1, n + 1), p):
        right = tuple(x for x in range(1, n + 1) if x not in left)
        out.append(invert(left + right))
    return tuple(out)


def multi_shuffle_decompose(
    s: Permutation, arities: Sequence[int]
) -> tuple[tuple[Permutation, ...], Permutation]:
    """Write ``s = (s_1 x ... x s_k) . a`` with ``a`` a multi-shuffle of type ``arities``."""
    if sum(arities) != len(s):
        raise PermutationError(f"arities {list(arities)} do not sum to {len(s)}")
    offsets = [0]
    for length in arities:
        offsets.append(offsets[-1] + length)
    positions: list[list[int]] = [[] for _ in arities]
    owner = {}
    for b in range(len(arities)):
        for v in range(offsets[b] + 1, offsets[b + 1] + 1):
            owner[v] = b
    for pos, v in enumerate(s, 1):
        positions[owner[v]].append(pos)
    alpha = [0] * len(s)
    factors = []
    for b, plist in enumerate(positions):
        for k, pos in enumerate(plist, 1):
            alpha[pos - 1] = offsets[b] + k
        factors.append(tuple(s[pos - 1] - offsets[b] for pos in plist))
    return tuple(factors), tuple(alpha)


def shuffle_decompose(
    s: Permutation, p: int, q: int
) -> tuple[Permutation, Permutation, Permutation]:
    """Unique ``s = direct_sum(s1, s2) . a`` with ``a`` a ``(p, q)``-shuffle."""
    (s1, s2), alpha = multi_shuffle_decompose(s, (p, q))
    return s1, s2, alpha


def multi_direct_sum(parts: Sequence[Permutation]) -> Permutation:
    out: Permutation = ()
    for part in parts:
        out = direct_sum(out, part)
    return out


def format_perm(s: Permutation) -> str:
    return "[" + ",".join(str(x) for x in s) + "]"


def parse_perm(text: str) -> Permutation:
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise PermutationError(f"expected [a1,...,an], got {text!r}")
    inner = body[1:-1].strip()
    if not inner:
        return ()
    try:
        return as_permutation(int(x) for x in inner.split(","))
    except ValueError as exc:
        raise PermutationError(f"bad permutation literal {text!r}") from exc
