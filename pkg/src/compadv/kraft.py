"""Kraft-sum machinery and competitive-optimality certificates.

Kraft sums are handled as integers in units of 2^-L, where L is the longest
codeword of the profile, so every comparison here is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .coding import (HuffmanTree, all_optimal_profiles, expected_length,
                     huffman, huffman_trees, is_complete)
from .core import (CompAdvError, LengthProfile, Source, SymbolSet, TooLarge,
                   check_indices, check_profile, integer_weights, kraft_units,
                   members)
from .oracle import brute_force_is_optimal
from .verdict import (LeafTriple, Method, OptimalityVerdict, Status,
                      SubsetPair)

SUBSET_GUARD = 16


class BadSubset(CompAdvError):
    pass


class PreconditionViolated(CompAdvError):
    pass


class KraftOrderViolated(CompAdvError):
    pass


class NotOptimalProfile(CompAdvError):
    pass


class LeafScope(Enum):
    """Which sibling pairs the leaf condition inspects."""
    ALL = "all"
    ROOT = "root"


@dataclass(frozen=True)
class KraftPartition:
    """Parts A_1, A_2, ... with K(A_i) = b_i 2^-i for the binary digits of K(base_set)."""

    parts: tuple[SymbolSet, ...]
    base_set: SymbolSet

    def part(self, i: int) -> SymbolSet:
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else frozenset()

    def beyond(self, j: int) -> SymbolSet:
        return frozenset().union(*self.parts[j:])

    def to_dict(self) -> dict:
        return {"base_set": sorted(self.base_set),
                "parts": [sorted(a) for a in self.parts]}


def huffman_kraft_partition(p: Sequence[int], a: Iterable[int]) -> KraftPartition:
    p = check_profile(p)
    a = check_indices(a, len(p))
    if not a or len(a) == len(p):
        raise BadSubset("need a nonempty proper subset of the alphabet")
    w, scale = kraft_units(p)
    top = scale.bit_length() - 1
    remaining = set(a)
    parts: dict[int, SymbolSet] = {}
    while remaining:
        ka = sum(w[u] for u in remaining)
        if ka >= scale:
            raise BadSubset("subset Kraft sum is not below 1")
        low = ka & -ka
        k = top - (low.bit_length() - 1)
        small = sorted((u for u in remaining if w[u] <= low), key=lambda u: (w[u], u))
        chosen, acc = [], 0
        for u in small:
            chosen.append(u)
            acc += w[u]
            if acc >= low:
                break
        assert acc == low, "greedy extraction overshot a power of two"
        parts[k] = frozenset(chosen)
        remaining.difference_update(chosen)
    length = max(parts)
    return KraftPartition(tuple(parts.get(i, frozenset()) for i in range(1, length + 1)), a)


def kraft_completion(p: Sequence[int], universe: Iterable[int], a: Iterable[int],
                     j: int) -> SymbolSet:
    """A set B inside ``universe`` minus ``a`` with K(a | B) = 2^-j."""
    p = check_profile(p)
    universe = check_indices(universe, len(p))
    a = check_indices(a, len(p))
    if not a <= universe:
        raise PreconditionViolated("a must lie inside the universe")
    if j < 0:
        raise PreconditionViolated("j must be nonnegative")
    w, scale = kraft_units(p)
    ku = sum(w[u] for u in universe)
    ka = sum(w[u] for u in a)
    # work at resolution 2^-max(L, j)
    shift = max(0, j - (scale.bit_length() - 1))
    ku, ka, scale = ku << shift, ka << shift, scale << shift
    target = scale >> j
    if not 0 < ka < target:
        raise PreconditionViolated("need 0 < K(a) < 2^-j")
    if ku % target:
        raise PreconditionViolated("K(universe) must be a multiple of 2^-j")
    rest = universe - a
    b = huffman_kraft_partition(p, rest).beyond(j)
    assert ka + sum(w[u] << shift for u in b) == target
    return b


def construct_dominating_profile(p: Sequence[int], u: Iterable[int],
                                 v: Iterable[int]) -> LengthProfile:
    """Shorten every word in u by one and lengthen every word in v by k."""
    p = check_profile(p)
    u = check_indices(u, len(p))
    v = check_indices(v, len(p))
    if u & v:
        raise PreconditionViolated("u and v must be disjoint")
    w, _ = kraft_units(p)
    ku = sum(w[x] for x in u)
    kv = sum(w[x] for x in v)
    if ku >= kv:
        raise KraftOrderViolated("need K(u) < K(v)")
    k = 1
    # K(u) <= (1 - 2^-k) K(v)
    while (ku << k) > ((1 << k) - 1) * kv:
        k += 1
    out = tuple(l - 1 if x in u else l + k if x in v else l for x, l in enumerate(p))
    return check_profile(out)


def _scaled(s: Source):
    if s.mode.is_exact:
        return integer_weights(s)
    return list(s.probabilities), 1.0


def max_subset_advantage(s: Source, p: Sequence[int], guard: int = SUBSET_GUARD):
    """Maximum of P(U) - P(V) over disjoint U, V with K(U) < K(V).

    Dynamic programme over symbols keyed by the Kraft difference K(V) - K(U).
    Differences too large to ever turn nonpositive are merged, and those that
    can no longer become positive are dropped. Returns (value, U, V).
    """
    p = check_profile(p, s.n)
    if s.n > guard:
        raise TooLarge(f"subset search is limited to n <= {guard}")
    kw, _ = kraft_units(p)
    pw, den = _scaled(s)
    rest = sum(kw)
    states = {0: (0, 0, 0)}
    for i in range(s.n):
        rest -= kw[i]
        bit = 1 << i
        nxt: dict[int, tuple] = {}
        for d, (val, um, vm) in states.items():
            for nd, nv, nu, nvm in ((d, val, um, vm),
                                    (d - kw[i], val + pw[i], um | bit, vm),
                                    (d + kw[i], val - pw[i], um, vm | bit)):
                if nd + rest < 1:
                    continue
                if nd > rest:
                    nd = rest + 1
                cur = nxt.get(nd)
                if cur is None or nv > cur[0]:
                    nxt[nd] = (nv, nu, nvm)
        states = nxt
    best = None
    for d, st in states.items():
        if d >= 1 and (best is None or st[0] > best[0]):
            best = st
    val, um, vm = best
    value = Fraction(val, den) if s.mode.is_exact else float(val)
    return value, members(um), members(vm)


def _require_optimal(s: Source, p: LengthProfile):
    if not is_complete(p):
        raise NotOptimalProfile(f"profile {p} is not complete")
    gap = expected_length(s, p) - expected_length(s, huffman(s)[1])
    if gap > s.epsilon * max(1, s.n):
        raise NotOptimalProfile(f"profile {p} is not expected-length optimal")


def subset_certificate(s: Source, p: Sequence[int],
                       guard: int = SUBSET_GUARD) -> OptimalityVerdict:
    """Exact decision for an expected-length-optimal profile.

    The profile fails to be competitively optimal exactly when some disjoint
    U, V have K(U) < K(V) and P(U) > P(V).
    """
    p = check_profile(p, s.n)
    if s.n > guard:
        raise TooLarge(f"subset search is limited to n <= {guard}")
    _require_optimal(s, p)
    value, u, v = max_subset_advantage(s, p, guard)
    if value > s.epsilon:
        return OptimalityVerdict(Status.NOT_OPTIMAL, Method.SUBSET_EXACT, SubsetPair(u, v))
    if value <= 0:
        return OptimalityVerdict(Status.OPTIMAL, Method.SUBSET_EXACT)
    return OptimalityVerdict(Status.UNKNOWN, Method.SUBSET_EXACT)


def _min_leaf_symbol(t: HuffmanTree, y: int) -> int:
    return min(z for z in t.leaves_under(y) if t.weight[z] == t.min_leaf[y])


def leaf_condition(s: Source, t: HuffmanTree,
                   scope: LeafScope = LeafScope.ALL) -> OptimalityVerdict:
    """Look for siblings y, y' and a leaf z under y with P(z) < P(y) - P(y').

    ``LeafScope.ROOT`` restricts the search to the two children of the root.
    """
    eps = s.epsilon * t.scale if not s.mode.is_exact else 0
    pairs = list(t.sibling_pairs())
    if scope is LeafScope.ROOT:
        pairs = pairs[-1:]
    for a, b in pairs:
        for y, ys in ((a, b), (b, a)):
            if t.min_leaf[y] < t.weight[y] - t.weight[ys] - eps:
                cert = LeafTriple(y, ys, _min_leaf_symbol(t, y))
                return OptimalityVerdict(Status.NOT_OPTIMAL, Method.LEAF_CONDITION, cert)
    return OptimalityVerdict(Status.UNKNOWN, Method.LEAF_CONDITION)


def leaf_triple_to_pair(t: HuffmanTree, cert: LeafTriple) -> SubsetPair:
    """U = leaves under y without z, V = leaves under y'."""
    return SubsetPair(t.leaves_under(cert.y) - {cert.z}, t.leaves_under(cert.y_sib))


def huffman_tree_for(s: Source, p: Sequence[int]) -> HuffmanTree:
    tree, prof = huffman(s)
    if prof == tuple(p):
        return tree
    trees = huffman_trees(s)
    if tuple(p) not in trees:
        raise NotOptimalProfile(f"no Huffman tree of this source has profile {tuple(p)}")
    return trees[tuple(p)]


def is_competitively_optimal(s: Source, p: Sequence[int],
                             method: Method = Method.SUBSET_EXACT) -> OptimalityVerdict:
    p = check_profile(p, s.n)
    if method is Method.SUBSET_EXACT:
        return subset_certificate(s, p)
    if method is Method.LEAF_CONDITION:
        return leaf_condition(s, huffman_tree_for(s, p))
    if method is Method.BRUTE_FORCE:
        return brute_force_is_optimal(s, p)
    from .families import hexahedron_verdict, classify_small
    _require_optimal(s, p)
    if method is Method.HEXAHEDRON:
        return hexahedron_verdict(s, p)
    if method is Method.SMALL_N:
        return classify_small(s)
    raise ValueError(f"unknown method {method}")


def exists_competitively_optimal_code(s: Source):
    """(True, witness) when some optimal profile is competitively optimal."""
    for p in sorted(all_optimal_profiles(s)):
        if subset_certificate(s, p).status is Status.OPTIMAL:
            return True, p
    return False, None
