import random
from fractions import Fraction as F

import pytest

from compadv.coding import all_optimal_profiles, expected_length, huffman
from compadv.competition import advantage
from compadv.core import FLOAT, entropy, make_source
from compadv.families import (FOUR_CODES_C2_CODEWORDS, BadEpsilon, N4Class,
                              NotSorted, WrongSize, classify_n4, classify_small,
                              det, family_one_third, family_sf_gap,
                              fixture_four_codes, fixture_two_huffman,
                              n4_nonoptimal_fraction, n4_volumes)
from compadv.oracle import brute_force_is_optimal
from compadv.verdict import Method, Status


def test_one_third_examples():
    f = family_one_third(4, F(1, 30))
    assert f.source.probabilities == (F(11, 30), F(10, 30), F(8, 30), F(1, 30))
    assert f.huffman_profile == f.reference_profile == (1, 2, 3, 3)
    assert f.challenger_profile == (3, 1, 2, 3)
    assert f.predicted_advantage == F(7, 30)
    assert advantage(f.source, f.challenger_profile, f.reference_profile) == F(7, 30)
    # the exact length gap is 2 p1 - p2 - p3 = 4 eps, inside the 14 eps / 3 bound
    gap = expected_length(f.source, f.challenger_profile) - expected_length(f.source, f.reference_profile)
    assert gap == f.predicted_avg_length_gap == F(2, 15)
    assert gap <= f.avg_length_gap_bound == F(7, 45)

    g = family_one_third(5, F(1, 100))
    assert g.predicted_advantage == F(91, 300)
    assert advantage(g.source, g.challenger_profile, g.huffman_profile) == F(91, 300)
    with pytest.raises(BadEpsilon):
        family_one_third(4, F(1, 2))


def test_one_third_validation():
    with pytest.raises(BadEpsilon):
        family_one_third(3, F(1, 100))
    with pytest.raises(BadEpsilon):
        family_one_third(6, F(0))
    with pytest.raises(BadEpsilon):
        family_one_third(6, F(1, 8))
    for n in range(4, 12):
        f = family_one_third(n, F(1, 1000))
        assert sum(f.source.probabilities) == 1
        assert f.huffman_profile == tuple(range(1, n)) + (n - 1,)


def test_one_third_limit_is_monotone():
    advs, gaps = [], []
    for k in range(2, 9):
        f = family_one_third(6, F(1, 10 ** k))
        advs.append(advantage(f.source, f.challenger_profile, f.huffman_profile))
        gaps.append(expected_length(f.source, f.challenger_profile)
                    - expected_length(f.source, f.huffman_profile))
    assert all(a < F(1, 3) for a in advs)
    assert advs == sorted(advs) and gaps == sorted(gaps, reverse=True)
    assert F(1, 3) - advs[-1] < F(1, 10 ** 7) and gaps[-1] < F(1, 10 ** 7)


def test_sf_gap_examples():
    f = family_sf_gap(5, F(1, 2000))
    assert f.reference_profile == (2, 3, 4, 5, 4)
    assert f.challenger_profile == (1, 2, 3, 4, 4)
    d = advantage(f.source, f.challenger_profile, f.reference_profile)
    assert d == F(15, 16) - F(4, 2000) == f.predicted_advantage
    assert d >= 1 - F(1, 8)
    one = family_sf_gap(1, F(1, 8))
    assert one.source.probabilities == (1,)
    assert advantage(one.source, one.challenger_profile, one.reference_profile) == 0
    with pytest.raises(BadEpsilon):
        family_sf_gap(5, F(1, 500))


def test_sf_gap_properties():
    for n in range(1, 16):
        for eps in (F(1, 2 * 4 ** n), F(1, 4 ** n + 1), F(1, 10 * 4 ** n)):
            f = family_sf_gap(n, eps)
            s = f.source
            d = advantage(s, f.challenger_profile, f.reference_profile)
            assert d >= 1 - F(2) ** (2 - n)
            gap = expected_length(s, f.reference_profile) - expected_length(s, f.challenger_profile)
            assert gap == d == f.predicted_avg_length_gap
            assert float(expected_length(s, f.challenger_profile)) < entropy(s) + 2.0 ** (2 - n)


def test_classify_small_examples():
    assert classify_small(make_source([F(1, 2), F(1, 3), F(1, 6)])).status is Status.OPTIMAL
    assert classify_small(make_source([1])).method is Method.SMALL_N
    assert classify_small(make_source([0.9, 0.1], FLOAT)).status is Status.OPTIMAL
    with pytest.raises(WrongSize):
        classify_small(make_source([F(1, 4)] * 4))


def test_classify_n4_examples():
    assert classify_n4(make_source([F(2, 5), F(3, 10), F(1, 5), F(1, 10)])) is N4Class.NOT_OPTIMAL
    assert classify_n4(make_source([F(7, 10), F(1, 10), F(1, 10), F(1, 10)])) is N4Class.OPTIMAL
    assert classify_n4(fixture_two_huffman()) is N4Class.BOUNDARY
    with pytest.raises(NotSorted):
        classify_n4(make_source([F(1, 10), F(2, 5), F(3, 10), F(1, 5)]))
    with pytest.raises(WrongSize):
        classify_n4(make_source([F(1, 3)] * 3))


def test_classify_n4_float_boundary():
    assert classify_n4(make_source([0.4, 0.3, 0.2, 0.1], FLOAT)) is N4Class.NOT_OPTIMAL
    # p2 + p3 = p1 up to rounding
    assert classify_n4(make_source([0.5, 0.3, 0.2 - 1e-13, 1e-13], FLOAT)) is N4Class.BOUNDARY


def _oracle_n4(s):
    statuses = {brute_force_is_optimal(s, p).status for p in all_optimal_profiles(s)}
    return statuses


def test_classify_n4_agrees_with_oracle():
    rng = random.Random(8)
    checked = 0
    while checked < 10 ** 4:
        w = sorted((rng.randint(1, 10 ** 6) for _ in range(4)), reverse=True)
        s = make_source([F(x, sum(w)) for x in w])
        c = classify_n4(s)
        if c is N4Class.BOUNDARY:
            continue
        checked += 1
        want = Status.NOT_OPTIMAL if c is N4Class.NOT_OPTIMAL else Status.OPTIMAL
        assert _oracle_n4(s) == {want}


def test_classify_n4_boundary_is_mixed():
    # the two Huffman codes of the boundary source disagree
    assert _oracle_n4(fixture_two_huffman()) == {Status.OPTIMAL, Status.NOT_OPTIMAL}


def test_n4_fraction_and_volumes():
    assert n4_nonoptimal_fraction() == F(1, 3)
    v = n4_volumes()
    assert v["first"] == F(1, 1080)
    assert v["second"] == F(1, 720)
    assert v["cell"] == F(1, 144)


def test_det():
    assert det([[2, 0], [0, 3]]) == 6
    assert det([[0, 1], [1, 0]]) == -1
    assert det([[1, 2], [2, 4]]) == 0


def test_fixtures():
    s, named = fixture_four_codes()
    assert s.labels == ("a", "b", "c", "d", "e", "f")
    assert named["H1"] == (1, 2, 3, 4, 5, 5) and named["H2"] == (2, 2, 3, 3, 3, 3)
    assert named["C1"] == (3, 1, 2, 4, 5, 5)
    assert advantage(s, named["H1"], named["H2"]) == F(1, 9)
    assert advantage(s, named["C1"], named["H1"]) == F(1, 9)
    assert advantage(s, named["H2"], named["C1"]) == F(1, 9)
    assert expected_length(s, named["H1"]) == F(7, 3)


def test_c2_is_optimal_but_not_huffman_paired():
    s, named = fixture_four_codes()
    assert named["C2"] in all_optimal_profiles(s)
    words = FOUR_CODES_C2_CODEWORDS
    assert {len(w) for w in words.values()} == {2, 3}
    assert tuple(len(words[x]) for x in s.labels) == named["C2"]
    # e and f, the two least likely symbols, are not siblings
    assert words["e"][:-1] != words["f"][:-1]
    assert words["c"][:-1] == words["e"][:-1] and words["d"][:-1] == words["f"][:-1]
    # and the tree is a prefix code
    ws = list(words.values())
    assert not any(a != b and b.startswith(a) for a in ws for b in ws)


def test_two_huffman_fixture():
    s = fixture_two_huffman()
    assert huffman(s)[1] == (2, 2, 2, 2)
    assert all_optimal_profiles(s) >= {(2, 2, 2, 2), (1, 2, 3, 3)}
