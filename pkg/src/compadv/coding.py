"""Huffman and Shannon-Fano length profiles and structural predicates."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Iterator, Sequence

import numpy as np

from .core import (LengthProfile, Source, SymbolSet, TooLarge, check_profile,
                   integer_weights, kraft_sum, members)
from .oracle import complete_length_multisets, distinct_permutations

OPTIMAL_PROFILE_GUARD = 12
ENUMERATE_ALL_GUARD = 10
STRONG_MONOTONE_GUARD = 20


class TieBreak(Enum):
    CANONICAL = "canonical"
    ENUMERATE_ALL = "all"


@dataclass(frozen=True)
class HuffmanTree:
    """A Huffman tree stored as parallel per-node arrays.

    Nodes 0..n-1 are the leaves (node i is symbol i); internal nodes follow in
    creation order and the root is the last node. ``weight`` holds integers
    over the common denominator ``scale`` in exact mode, floats otherwise.
    """

    n: int
    weight: tuple
    min_leaf: tuple
    children: tuple  # (left, right) per internal node, None for leaves
    depth: tuple
    scale: object = 1

    @property
    def root(self) -> int:
        return len(self.weight) - 1

    def prob(self, node: int):
        if isinstance(self.scale, int):
            return Fraction(self.weight[node], self.scale)
        return self.weight[node]

    def is_leaf(self, node: int) -> bool:
        return node < self.n

    def profile(self) -> LengthProfile:
        return tuple(self.depth[:self.n])

    def sibling_pairs(self) -> Iterator[tuple[int, int]]:
        for c in self.children[self.n:]:
            yield c

    def leaves_under(self, node: int) -> SymbolSet:
        out, stack = [], [node]
        while stack:
            v = stack.pop()
            if v < self.n:
                out.append(v)
            else:
                stack.extend(self.children[v])
        return frozenset(out)


def _node_weights(s: Source):
    if s.mode.is_exact:
        w, den = integer_weights(s)
        return w, den
    return list(s.probabilities), 1.0


def _build_tree(n: int, w: list, merges: Sequence[tuple[int, int]], scale) -> HuffmanTree:
    weight = list(w)
    min_leaf = list(w)
    children: list = [None] * n
    for a, b in merges:
        weight.append(weight[a] + weight[b])
        min_leaf.append(min(min_leaf[a], min_leaf[b]))
        children.append((a, b))
    depth = [0] * len(weight)
    for v in range(len(weight) - 1, n - 1, -1):
        a, b = children[v]
        depth[a] = depth[b] = depth[v] + 1
    return HuffmanTree(n, tuple(weight), tuple(min_leaf), tuple(children),
                       tuple(depth), scale)


def _canonical_merges(w: list) -> list[tuple[int, int]]:
    # ties go to the earliest-created node; leaves precede internal nodes
    heap = [(x, i) for i, x in enumerate(w)]
    heapq.heapify(heap)
    merges = []
    nxt = len(w)
    while len(heap) > 1:
        xa, a = heapq.heappop(heap)
        xb, b = heapq.heappop(heap)
        merges.append((a, b))
        heapq.heappush(heap, (xa + xb, nxt))
        nxt += 1
    return merges


def _all_merge_sequences(w: list) -> Iterator[list[tuple[int, int]]]:
    """Every merge order the Huffman rule allows, pruning repeated states.

    A state is the multiset of subtrees, each described by its weight and the
    relative depths of its leaves, which fixes every profile reachable from it.
    """
    n = len(w)
    seen = set()
    weight = list(w)
    sig: list = [((i, 0),) for i in range(n)]

    def key(active):
        return tuple(sorted((weight[v], sig[v]) for v in active))

    def rec(active, merges):
        if len(active) == 1:
            yield list(merges)
            return
        k = key(active)
        if k in seen:
            return
        seen.add(k)
        ws = sorted(weight[v] for v in active)
        m1, m2 = ws[0], ws[1]
        lows = [v for v in active if weight[v] == m1]
        if len(lows) >= 2:
            pairs = [(a, b) for i, a in enumerate(lows) for b in lows[i + 1:]]
        else:
            pairs = [(lows[0], b) for b in active if b != lows[0] and weight[b] == m2]
        for a, b in pairs:
            v = len(weight)
            weight.append(weight[a] + weight[b])
            sig.append(tuple(sorted((x, d + 1) for x, d in sig[a] + sig[b])))
            rest = [x for x in active if x not in (a, b)] + [v]
            merges.append((a, b))
            yield from rec(rest, merges)
            merges.pop()
            weight.pop()
            sig.pop()

    yield from rec(list(range(n)), [])


def huffman(s: Source, tie_break: TieBreak = TieBreak.CANONICAL):
    """Canonical Huffman tree and its length profile.

    With ``TieBreak.ENUMERATE_ALL`` a list of (tree, profile) pairs is
    returned instead, one per distinct profile reachable by breaking ties
    differently.
    """
    w, scale = _node_weights(s)
    if tie_break is TieBreak.CANONICAL:
        tree = _build_tree(s.n, w, _canonical_merges(w), scale)
        return tree, tree.profile()
    return [(t, p) for p, t in huffman_trees(s).items()]


def huffman_trees(s: Source, guard: int = ENUMERATE_ALL_GUARD) -> dict:
    """Map each Huffman profile of ``s`` to one tree realising it."""
    if s.n > guard:
        raise TooLarge(f"tie enumeration is limited to n <= {guard}")
    w, scale = _node_weights(s)
    out = {}
    for merges in _all_merge_sequences(w):
        tree = _build_tree(s.n, w, merges, scale)
        out.setdefault(tree.profile(), tree)
    return {p: t for p, t in out.items()}


def huffman_profiles(s: Source, guard: int = ENUMERATE_ALL_GUARD) -> set[LengthProfile]:
    return set(huffman_trees(s, guard))


def expected_length(s: Source, p: Sequence[int]):
    p = check_profile(p, s.n)
    zero = Fraction(0) if s.mode.is_exact else 0.0
    return sum((l * x for l, x in zip(p, s.probabilities)), zero)


def all_optimal_profiles(s: Source, max_n: int = OPTIMAL_PROFILE_GUARD) -> set[LengthProfile]:
    """Every complete profile of minimum expected length.

    Scans the complete length multisets; an optimal assignment never gives a
    longer word to a strictly more probable symbol, so within a multiset only
    the orderings of equal-probability symbols are free.
    """
    if s.n > max_n:
        raise TooLarge(f"optimal-profile enumeration is limited to n <= {max_n}")
    order = sorted(range(s.n), key=lambda i: (-s.probabilities[i], i))
    probs = [s.probabilities[i] for i in order]
    costs = []
    for ms in complete_length_multisets(s.n):
        costs.append((sum(l * x for l, x in zip(ms, probs)), ms))
    best = min(c for c, _ in costs)
    winners = [ms for c, ms in costs if c - best <= s.epsilon]

    groups = []
    start = 0
    for i in range(1, s.n + 1):
        if i == s.n or probs[i] != probs[start]:
            groups.append((start, i))
            start = i
    out = set()
    for ms in winners:
        blocks = [list(distinct_permutations(ms[a:b])) for a, b in groups]
        for choice in product(*blocks):
            prof = [0] * s.n
            pos = 0
            for block in choice:
                for length in block:
                    prof[order[pos]] = length
                    pos += 1
            out.add(tuple(prof))
    return out


def _ceil_log2_inverse(p: Fraction) -> int:
    """Smallest m >= 0 with 2^-m <= p, in exact integer arithmetic."""
    a, b = p.numerator, p.denominator
    m = max(0, b.bit_length() - a.bit_length() - 1)
    while (a << m) < b:
        m += 1
    return m


def shannon_fano(s: Source) -> LengthProfile:
    # floats convert exactly to binary fractions, so no log rounding either way
    return tuple(_ceil_log2_inverse(Fraction(p)) for p in s.probabilities)


def is_complete(p: Sequence[int]) -> bool:
    return kraft_sum(p) == 1


def canonical_codewords(p: Sequence[int]) -> list[tuple[int, int]]:
    """(length, integer codeword) per symbol, assigned lexicographically in
    order of (length, symbol index)."""
    order = sorted(range(len(p)), key=lambda i: (p[i], i))
    words = [None] * len(p)
    code, prev = 0, 0
    for i in order:
        code <<= p[i] - prev
        prev = p[i]
        words[i] = (p[i], code)
        code += 1
    return words


def is_monotone(s: Source, p: Sequence[int]) -> bool:
    """Monotonicity of the canonical code tree realising ``p``.

    Every node strictly higher in the tree must have probability at least
    that of every node strictly lower.
    """
    p = check_profile(p, s.n)
    node_prob: dict[tuple[int, int], object] = {}
    for (length, code), x in zip(canonical_codewords(p), s.probabilities):
        for d in range(length + 1):
            key = (d, code >> (length - d))
            node_prob[key] = node_prob.get(key, 0) + x
    by_depth: dict[int, list] = {}
    for (d, _), x in node_prob.items():
        by_depth.setdefault(d, []).append(x)
    depths = sorted(by_depth)
    lowest_above = None
    for d in reversed(depths):
        if lowest_above is not None and min(by_depth[d]) < lowest_above - s.epsilon:
            return False
        top = max(by_depth[d])
        lowest_above = top if lowest_above is None else max(lowest_above, top)
    return True


def subset_sums(values: Sequence, exact_ints: bool) -> np.ndarray:
    """Array indexed by bitmask holding the sum of the selected values."""
    if exact_ints:
        dtype = np.int64 if sum(abs(v) for v in values) < 2 ** 62 else object
    else:
        dtype = np.float64
    out = np.zeros(1, dtype=dtype)
    for v in values:
        out = np.concatenate([out, out + (v if dtype is object else dtype(v))])
    return out


def strong_monotonicity_witness(s: Source, p: Sequence[int],
                                guard: int = STRONG_MONOTONE_GUARD):
    """Subsets (A, B) with K(A) = 2^-i > 2^-j = K(B) but P(A) < P(B), or None."""
    p = check_profile(p, s.n)
    if s.n > guard:
        raise TooLarge(f"subset search is limited to n <= {guard}")
    top = max(p)
    kr = subset_sums([1 << (top - l) for l in p], True).astype(np.int64)
    if s.mode.is_exact:
        pr = subset_sums(integer_weights(s)[0], True)
    else:
        pr = subset_sums(s.probabilities, False)
    power = (kr > 0) & ((kr & (kr - 1)) == 0)
    masks = np.nonzero(power)[0]
    levels = sorted(set(kr[masks].tolist()), reverse=True)
    lo = {}
    hi = {}
    for k in levels:
        sel = masks[kr[masks] == k]
        vals = pr[sel]
        lo[k] = sel[int(np.argmin(vals))]
        hi[k] = sel[int(np.argmax(vals))]
    # running argmax of P over all strictly smaller Kraft levels
    best_below = None
    for k in reversed(levels):
        if best_below is not None:
            a, b = lo[k], best_below
            if pr[a] < pr[b] - s.epsilon:
                return members(int(a)), members(int(b))
        if best_below is None or pr[hi[k]] > pr[best_below]:
            best_below = hi[k]
    return None


def is_strongly_monotone(s: Source, p: Sequence[int],
                         guard: int = STRONG_MONOTONE_GUARD) -> bool:
    return strong_monotonicity_witness(s, p, guard) is None
