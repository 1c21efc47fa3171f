"""Brute-force ground truth: every complete length profile, every challenger.

Only complete challengers are enumerated. An incomplete code always has a
codeword that can be shortened, which never hurts its advantage.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .core import (LengthProfile, Source, TooLarge, check_profile,
                   integer_weights)
from .verdict import DominatingProfile, Method, OptimalityVerdict, Status

ENUMERATION_GUARD = 10


def complete_length_multisets(n: int, max_len: int | None = None) -> list[tuple[int, ...]]:
    """Sorted length multisets of complete binary trees with ``n`` leaves.

    Grown leaf by leaf: each tree with k leaves comes from one with k-1 leaves
    by splitting a leaf at depth d into two leaves at depth d+1.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if max_len is None:
        max_len = n - 1
    level = {(0,)}
    for _ in range(n - 1):
        grown = set()
        for ms in level:
            for d in set(ms):
                if d < max_len:
                    rest = list(ms)
                    rest.remove(d)
                    grown.add(tuple(sorted(rest + [d + 1, d + 1])))
        level = grown
    return sorted(level)


def distinct_permutations(items: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Distinct orderings of a multiset in lexicographic order."""
    a = sorted(items)
    n = len(a)
    while True:
        yield tuple(a)
        i = n - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])


def enumerate_complete_profiles(n: int, max_len: int | None = None,
                                guard: int = ENUMERATION_GUARD) -> Iterator[LengthProfile]:
    if not 1 <= n <= guard:
        raise TooLarge(f"full profile enumeration is limited to n <= {guard}")
    for ms in complete_length_multisets(n, max_len):
        yield from distinct_permutations(ms)


@lru_cache(maxsize=32)
def _profile_matrix(n: int, max_len: int) -> np.ndarray:
    rows = [p for ms in complete_length_multisets(n, max_len)
            for p in distinct_permutations(ms)]
    mat = np.array(rows, dtype=np.int16).reshape(len(rows), n)
    order = np.lexsort(mat.T[::-1])
    mat = mat[order]
    mat.setflags(write=False)
    return mat


def profile_matrix(n: int, max_len: int | None = None,
                   guard: int = ENUMERATION_GUARD) -> np.ndarray:
    """All complete profiles as rows of an array, in lexicographic order."""
    if not 1 <= n <= guard:
        raise TooLarge(f"full profile enumeration is limited to n <= {guard}")
    return _profile_matrix(n, n - 1 if max_len is None else max_len)


def _advantages(s: Source, p: LengthProfile, mat: np.ndarray):
    """Numerators of every challenger's advantage over p, and their denominator."""
    sign = np.sign(np.asarray(p, dtype=np.int16)[None, :] - mat).astype(np.int8)
    if not s.mode.is_exact:
        return sign @ np.asarray(s.probabilities, dtype=np.float64), 1
    w, den = integer_weights(s)
    if den < 2 ** 62:
        return sign.astype(np.int64) @ np.asarray(w, dtype=np.int64), den
    return sign.astype(object) @ np.asarray(w, dtype=object), den


def max_advantage_over(s: Source, p: Sequence[int], guard: int = ENUMERATION_GUARD):
    """Largest advantage any complete profile has over ``p``, with the
    lexicographically smallest maximiser."""
    p = check_profile(p, s.n)
    if s.n == 1:
        return (s.probabilities[0] * 0, (0,))
    mat = profile_matrix(s.n, guard=guard)
    num, den = _advantages(s, p, mat)
    best = int(np.argmax(num))
    value = num[best]
    if s.mode.is_exact:
        value = Fraction(int(value), den)
    else:
        value = float(value)
    return value, tuple(int(x) for x in mat[best])


def brute_force_is_optimal(s: Source, p: Sequence[int],
                           guard: int = ENUMERATION_GUARD) -> OptimalityVerdict:
    value, challenger = max_advantage_over(s, p, guard)
    if value > s.epsilon:
        return OptimalityVerdict(Status.NOT_OPTIMAL, Method.BRUTE_FORCE,
                                 DominatingProfile(challenger))
    if value <= 0:
        return OptimalityVerdict(Status.OPTIMAL, Method.BRUTE_FORCE)
    return OptimalityVerdict(Status.UNKNOWN, Method.BRUTE_FORCE)
