import math
import random
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings

from compadv.coding import (TieBreak, all_optimal_profiles, canonical_codewords,
                            expected_length, huffman, huffman_profiles,
                            is_complete, is_monotone, is_strongly_monotone,
                            shannon_fano, strong_monotonicity_witness)
from compadv.core import (FLOAT, TooLarge, entropy, is_dyadic, kraft_sum,
                          make_source)
from compadv.families import family_sf_gap, fixture_four_codes, fixture_two_huffman
from compadv.oracle import (complete_length_multisets, distinct_permutations,
                            enumerate_complete_profiles)

from conftest import exact_sources, random_dyadic_source, random_exact_source

DYADIC4 = make_source([F(1, 2), F(1, 4), F(1, 8), F(1, 8)])


def test_huffman_examples():
    assert huffman(DYADIC4)[1] == (1, 2, 3, 3)
    s, named = fixture_four_codes()
    assert huffman(s)[1] in (named["H1"], named["H2"])
    assert {named["H1"], named["H2"]} <= huffman_profiles(s)
    assert huffman(make_source([F(2, 5), F(3, 10), F(1, 5), F(1, 10)]))[1] == (1, 2, 3, 3)


def test_huffman_tree_shape():
    s = make_source([F(2, 5), F(3, 10), F(1, 5), F(1, 10)])
    tree, prof = huffman(s)
    assert tree.prob(tree.root) == 1
    assert tree.profile() == prof
    # 1/10 + 1/5 first, then 3/10 with that node, then the root
    assert list(tree.sibling_pairs()) == [(3, 2), (1, 4), (0, 5)]
    assert tree.leaves_under(5) == {1, 2, 3}
    assert tree.prob(5) == F(3, 5)
    assert tree.min_leaf[5] == tree.weight[3]


def test_canonical_tie_break_is_deterministic():
    s = fixture_two_huffman()
    assert huffman(s)[1] == (2, 2, 2, 2)
    assert huffman(s) == huffman(s)


def test_enumerate_all_returns_tree_profile_pairs():
    s = fixture_two_huffman()
    items = huffman(s, TieBreak.ENUMERATE_ALL)
    assert {p for _, p in items} == {(2, 2, 2, 2), (1, 2, 3, 3), (2, 1, 3, 3)}
    for tree, p in items:
        assert tree.profile() == p


def test_enumerate_all_guard():
    with pytest.raises(TooLarge):
        huffman_profiles(make_source([F(1, 11)] * 11))


def test_float_mode_huffman_matches_exact():
    exact = make_source([F(2, 5), F(3, 10), F(1, 5), F(1, 10)])
    approx = make_source([0.4, 0.3, 0.2, 0.1], FLOAT)
    assert huffman(exact)[1] == huffman(approx)[1]


def test_all_optimal_profiles_examples():
    # the two named codes, plus the relabelling of H2 that swaps the equal symbols
    assert all_optimal_profiles(fixture_two_huffman()) == {(2, 2, 2, 2), (1, 2, 3, 3), (2, 1, 3, 3)}
    assert all_optimal_profiles(DYADIC4) == {(1, 2, 3, 3)}
    s = make_source([F(11, 30), F(10, 30), F(8, 30), F(1, 30)])
    assert all_optimal_profiles(s) == {(1, 2, 3, 3)}
    with pytest.raises(TooLarge):
        all_optimal_profiles(make_source([F(1, 13)] * 13))


def test_all_optimal_profiles_matches_plain_enumeration(rng):
    for n in range(1, 8):
        for _ in range(6):
            s = random_exact_source(rng, n, top=5)
            costs = {p: expected_length(s, p) for p in enumerate_complete_profiles(n)}
            best = min(costs.values())
            assert all_optimal_profiles(s) == {p for p, c in costs.items() if c == best}


def test_shannon_fano_examples():
    assert shannon_fano(DYADIC4) == (1, 2, 3, 3)
    assert shannon_fano(fixture_two_huffman()) == (2, 2, 3, 3)
    assert shannon_fano(family_sf_gap(5, F(1, 2000)).source) == (2, 3, 4, 5, 4)
    assert shannon_fano(make_source([1])) == (0,)


def test_shannon_fano_exact_near_powers_of_two():
    # within 4^-n of 2^-k: a float log would round these the wrong way
    for n in range(2, 30):
        s = family_sf_gap(n, F(1, 2 * 4 ** n)).source
        assert shannon_fano(s) == tuple(range(2, n + 1)) + (n - 1,)


def test_expected_length_examples():
    s, named = fixture_four_codes()
    assert expected_length(s, named["H1"]) == F(7, 3)
    assert expected_length(s, (3,) * 6) == 3
    assert expected_length(make_source([F(1, 4)] * 4), (1, 2, 3, 3)) == F(9, 4)


def test_is_complete_examples():
    assert is_complete((1, 2, 3, 3))
    assert not is_complete((2, 2, 3, 3))
    assert is_complete((0,))


def test_canonical_codewords_prefix_free():
    words = canonical_codewords((3, 1, 2, 3))
    assert words == [(3, 0b110), (1, 0b0), (2, 0b10), (3, 0b111)]


def test_is_monotone_examples():
    assert not is_monotone(make_source([F(1, 4)] * 4), (1, 2, 3, 3))
    assert is_monotone(make_source([1]), (0,))
    assert is_monotone(DYADIC4, (1, 2, 3, 3))


def test_is_strongly_monotone_examples():
    assert is_strongly_monotone(fixture_two_huffman(), (1, 2, 3, 3))
    u = make_source([F(1, 4)] * 4)
    assert not is_strongly_monotone(u, (1, 2, 3, 3))
    a, b = strong_monotonicity_witness(u, (1, 2, 3, 3))
    assert kraft_sum((1, 2, 3, 3), a) > kraft_sum((1, 2, 3, 3), b)
    assert sum(u.probabilities[i] for i in a) < sum(u.probabilities[i] for i in b)
    assert is_strongly_monotone(DYADIC4, (1, 2, 3, 3))


def _brute_strong_witness(s, p):
    n = s.n
    sets = []
    for m in range(1, 1 << n):
        a = [i for i in range(n) if m >> i & 1]
        k = kraft_sum(p, a)
        if k.numerator == 1 and k.denominator & (k.denominator - 1) == 0:
            sets.append((k, sum(s.probabilities[i] for i in a)))
    return any(ka > kb and pa < pb for ka, pa in sets for kb, pb in sets)


def test_strong_monotonicity_against_direct_pair_scan(rng):
    for n in range(2, 7):
        for _ in range(5):
            s = random_exact_source(rng, n, top=6)
            for p in list(enumerate_complete_profiles(n))[:40]:
                assert is_strongly_monotone(s, p) == (not _brute_strong_witness(s, p))


def test_huffman_output_structural_properties(rng):
    for n in range(1, 9):
        for _ in range(25):
            s = random_exact_source(rng, n)
            p = huffman(s)[1]
            assert is_complete(p)
            assert is_monotone(s, p)
            assert is_strongly_monotone(s, p)


def test_optimal_iff_strongly_monotone_all_profiles(rng):
    for n in range(2, 8):
        for _ in range(3 if n < 7 else 2):
            s = random_exact_source(rng, n, top=6)
            opt = all_optimal_profiles(s)
            for p in enumerate_complete_profiles(n):
                assert (p in opt) == is_strongly_monotone(s, p), (s, p)


def test_optimal_iff_strongly_monotone_n8_sample(rng):
    profiles = list(enumerate_complete_profiles(8))
    for _ in range(3):
        s = random_exact_source(rng, 8, top=6)
        opt = all_optimal_profiles(s)
        chosen = rng.sample(profiles, 400) + sorted(opt)
        for p in chosen:
            assert (p in opt) == is_strongly_monotone(s, p)


def test_huffman_minimises_expected_length(rng):
    for n in range(1, 9):
        profiles = np.array(list(enumerate_complete_profiles(n)))
        for _ in range(5):
            s = random_exact_source(rng, n)
            w = np.array([float(x) for x in s.probabilities])
            h = expected_length(s, huffman(s)[1])
            assert float(h) <= (profiles @ w).min() + 1e-12


@settings(max_examples=60, deadline=None)
@given(exact_sources(max_n=7))
def test_huffman_profiles_equal_optimal_profiles(s):
    # every optimal code is length equivalent to some Huffman code and vice versa
    assert huffman_profiles(s) == all_optimal_profiles(s)


@settings(max_examples=100, deadline=None)
@given(exact_sources(max_n=12, top=1000))
def test_shannon_fano_kraft_and_entropy(s):
    p = shannon_fano(s)
    assert kraft_sum(p) <= 1
    assert float(expected_length(s, p)) < entropy(s) + 1
    for l, x in zip(p, s.probabilities):
        assert F(1, 2 ** l) <= x and (l == 0 or x < F(1, 2 ** (l - 1)))


def test_dyadic_sources_huffman_equals_shannon_fano():
    rng = random.Random(4)
    for n in range(1, 12):
        for _ in range(10):
            s = random_dyadic_source(rng, n)
            assert is_dyadic(s)
            assert huffman(s)[1] == shannon_fano(s)


def test_multiset_counts_independent():
    # Kraft-equality filter over sorted tuples, a different route to the same sets
    from itertools import combinations_with_replacement
    for n in range(1, 9):
        direct = sorted(c for c in combinations_with_replacement(range(max(1, n)), n)
                        if sum(F(1, 2 ** l) for l in c) == 1)
        assert complete_length_multisets(n) == direct
    assert list(distinct_permutations((1, 2, 2))) == [(1, 2, 2), (2, 1, 2), (2, 2, 1)]
    assert math.factorial(4) // 2 == len(list(distinct_permutations((1, 2, 3, 3))))
