"""Named sources, extremal families and closed-form classifiers for small n."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .coding import huffman, shannon_fano
from .core import (CompAdvError, LengthProfile, Number, Source, check_profile,
                   make_source, to_fraction)
from .verdict import Method, OptimalityVerdict, Status, SubsetPair


class BadEpsilon(CompAdvError):
    pass


class WrongSize(CompAdvError):
    pass


class NotSorted(CompAdvError):
    pass


class N4Class(Enum):
    OPTIMAL = "optimal"
    NOT_OPTIMAL = "not_optimal"
    BOUNDARY = "boundary"


@dataclass(frozen=True)
class FamilyInstance:
    """A source with a reference code and a challenger that beats it.

    ``predicted_avg_length_gap`` is E[challenger] - E[reference] for the
    one-third family and E[reference] - E[challenger] for the Shannon-Fano
    family, i.e. always the magnitude of the expected-length difference.
    """

    source: Source
    reference_profile: LengthProfile
    huffman_profile: LengthProfile
    challenger_profile: LengthProfile
    predicted_advantage: Fraction
    predicted_avg_length_gap: Fraction
    avg_length_gap_bound: Fraction | None = None

    def to_dict(self) -> dict:
        from .core import source_to_dict
        return {
            "source": source_to_dict(self.source),
            "reference_profile": list(self.reference_profile),
            "huffman_profile": list(self.huffman_profile),
            "challenger_profile": list(self.challenger_profile),
            "predicted_advantage": str(self.predicted_advantage),
            "predicted_avg_length_gap": str(self.predicted_avg_length_gap),
            "avg_length_gap_bound": (None if self.avg_length_gap_bound is None
                                     else str(self.avg_length_gap_bound)),
        }


def family_one_third(n: int, eps: Number) -> FamilyInstance:
    """Sources whose Huffman code loses almost 1/3 to a relabelled copy of itself.

    Probabilities (1/3+e, 1/3, 1/3-2e, a*2^(4-k) for k = 4..n) with
    a = (e/2)/(1 - 2^(3-n)), so the tail sums to e. The challenger gives the
    first three symbols lengths 3, 1, 2 and keeps the rest.
    """
    if n < 4:
        raise BadEpsilon("the one-third family needs n >= 4")
    eps = to_fraction(eps)
    third = Fraction(1, 3)
    alpha = (eps / 2) / (1 - Fraction(1, 2 ** (n - 3)))
    probs = [third + eps, third, third - 2 * eps]
    probs += [alpha * Fraction(2) ** (4 - k) for k in range(4, n + 1)]
    if eps <= 0 or any(x <= 0 for x in probs):
        raise BadEpsilon(f"eps = {eps} gives a nonpositive probability")
    # Huffman must merge the tail first and keep the chain shape
    for k in range(1, n - 1):
        if not probs[k - 1] > probs[k] or (k >= 2 and not probs[k - 1] > sum(probs[k:])):
            raise BadEpsilon(f"eps = {eps} is too large for n = {n}")
    s = make_source(probs)
    href = tuple(range(1, n)) + (n - 1,)
    challenger = (3, 1, 2) + href[3:]
    return FamilyInstance(
        source=s,
        reference_profile=href,
        huffman_profile=huffman(s)[1],
        challenger_profile=challenger,
        predicted_advantage=third - 3 * eps,
        # 2 p1 - p2 - p3
        predicted_avg_length_gap=4 * eps,
        avg_length_gap_bound=Fraction(14, 3) * eps,
    )


def family_sf_gap(n: int, eps: Number) -> FamilyInstance:
    """Sources where a Huffman-shaped chain beats Shannon-Fano with advantage 1 - p_n.

    p_k = 2^-k - e for k < n and p_n = 2^(1-n) + (n-1)e, with 0 < e < 4^-n.
    """
    if n < 1:
        raise BadEpsilon("n must be positive")
    eps = to_fraction(eps)
    if not 0 < eps < Fraction(1, 4 ** n):
        raise BadEpsilon(f"need 0 < eps < 4^-{n}")
    probs = [Fraction(1, 2 ** k) - eps for k in range(1, n)]
    probs.append(Fraction(2, 2 ** n) + (n - 1) * eps)
    s = make_source(probs)
    challenger = tuple(range(1, n)) + (n - 1,) if n > 1 else (0,)
    gap = 1 - probs[-1]
    return FamilyInstance(
        source=s,
        reference_profile=shannon_fano(s),
        huffman_profile=huffman(s)[1],
        challenger_profile=challenger,
        predicted_advantage=gap,
        predicted_avg_length_gap=gap,
    )


def classify_small(s: Source) -> OptimalityVerdict:
    """Every Huffman code of a source with at most three symbols is competitively optimal."""
    if s.n > 3:
        raise WrongSize(f"small-n classification needs n <= 3, got {s.n}")
    return OptimalityVerdict(Status.OPTIMAL, Method.SMALL_N)


def _sorted_check(probs: Sequence, eps) -> None:
    if len(probs) != 4:
        raise WrongSize(f"n = 4 classification needs exactly four symbols, got {len(probs)}")
    if any(probs[i] < probs[i + 1] - eps for i in range(3)):
        raise NotSorted("probabilities must be sorted non-increasing")


def classify_n4(s: Source) -> N4Class:
    """Position of (p1, p2, p3) relative to the non-optimality hexahedron.

    Not optimal exactly when p3 + p4 < p1 < p2 + p3; equality in either
    deciding inequality is the boundary.
    """
    eps = 0 if s.mode.is_exact else s.epsilon
    _sorted_check(s.probabilities, eps)
    p1, p2, p3, p4 = s.probabilities
    upper = p2 + p3 - p1
    lower = p1 - p3 - p4
    if upper < -eps or lower < -eps:
        return N4Class.OPTIMAL
    if upper <= eps or lower <= eps:
        return N4Class.BOUNDARY
    return N4Class.NOT_OPTIMAL


def hexahedron_verdict(s: Source, p: Sequence[int]) -> OptimalityVerdict:
    """Hexahedron classification of an optimal profile, for any symbol order."""
    from .kraft import max_subset_advantage
    p = check_profile(p, s.n)
    if s.n != 4:
        raise WrongSize(f"hexahedron method needs n = 4, got {s.n}")
    order = sorted(range(4), key=lambda i: (-s.probabilities[i], i))
    ranked = Source(tuple(s.probabilities[i] for i in order), s.mode)
    cls = classify_n4(ranked)
    if cls is N4Class.OPTIMAL:
        return OptimalityVerdict(Status.OPTIMAL, Method.HEXAHEDRON)
    if cls is N4Class.BOUNDARY:
        return OptimalityVerdict(Status.UNKNOWN, Method.HEXAHEDRON)
    value, u, v = max_subset_advantage(s, p)
    assert value > 0, "interior point without a subset certificate"
    return OptimalityVerdict(Status.NOT_OPTIMAL, Method.HEXAHEDRON, SubsetPair(u, v))


def det(m: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant by fraction-valued Gaussian elimination."""
    a = [[Fraction(x) for x in row] for row in m]
    size = len(a)
    out = Fraction(1)
    for c in range(size):
        piv = next((r for r in range(c, size) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            out = -out
        out *= a[c][c]
        for r in range(c + 1, size):
            f = a[r][c] / a[c][c]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return out


def tetrahedron_volume(vertices: Sequence[Sequence[Number]]) -> Fraction:
    rows = [[to_fraction(x) for x in v] + [Fraction(1)] for v in vertices]
    return abs(det(rows)) / 6


_F = Fraction
HEXAHEDRON_VERTICES = (
    (_F(1, 2), _F(1, 2), _F(0)),
    (_F(2, 5), _F(1, 5), _F(1, 5)),
    (_F(1, 3), _F(1, 3), _F(1, 3)),
    (_F(1, 3), _F(1, 3), _F(1, 6)),
    (_F(1, 2), _F(1, 4), _F(1, 4)),
)
# the plane p2 + p4 = p1 through the first three vertices splits the dipyramid
HEXAHEDRON_TETRAHEDRA = (
    HEXAHEDRON_VERTICES[:3] + (HEXAHEDRON_VERTICES[3],),
    HEXAHEDRON_VERTICES[:3] + (HEXAHEDRON_VERTICES[4],),
)
SORTED_SIMPLEX_VERTICES = (
    (_F(1), _F(0), _F(0)),
    (_F(1, 2), _F(1, 2), _F(0)),
    (_F(1, 3), _F(1, 3), _F(1, 3)),
    (_F(1, 4), _F(1, 4), _F(1, 4)),
)


def n4_volumes() -> dict:
    """Volumes of the two tetrahedra and of the sorted-probability cell."""
    first, second = (tetrahedron_volume(t) for t in HEXAHEDRON_TETRAHEDRA)
    return {"first": first, "second": second, "cell": tetrahedron_volume(SORTED_SIMPLEX_VERTICES)}


def n4_nonoptimal_fraction() -> Fraction:
    """Probability that a flat-Dirichlet source of size 4 lands inside the hexahedron."""
    v = n4_volumes()
    return (v["first"] + v["second"]) / v["cell"]


FOUR_CODES_LABELS = ("a", "b", "c", "d", "e", "f")
FOUR_CODES_LENGTHS = {
    "H1": {"a": 1, "b": 2, "c": 3, "d": 4, "e": 5, "f": 5},
    "H2": {"a": 2, "b": 2, "c": 3, "d": 3, "e": 3, "f": 3},
    "C1": {"a": 3, "b": 1, "c": 2, "d": 4, "e": 5, "f": 5},
    "C2": {"a": 2, "b": 2, "c": 3, "d": 3, "e": 3, "f": 3},
}
# C2 joins c with e and d with f, which Huffman never does since e, f are the two smallest
FOUR_CODES_C2_CODEWORDS = {"a": "00", "b": "01", "c": "100", "e": "101", "d": "110", "f": "111"}


def fixture_two_huffman() -> Source:
    """(1/3, 1/3, 1/6, 1/6): Huffman codes (2,2,2,2) and (1,2,3,3) both arise."""
    return make_source([_F(1, 3), _F(1, 3), _F(1, 6), _F(1, 6)], labels=("a", "b", "c", "d"))


TWO_HUFFMAN_PROFILES = {"H1": (2, 2, 2, 2), "H2": (1, 2, 3, 3)}


def fixture_four_codes() -> tuple[Source, dict[str, LengthProfile]]:
    """Source a..f = (1/3, 1/3, 1/9, 1/9, 1/18, 1/18) and codes H1, H2, C1, C2.

    H1 beats H2, C1 beats H1 and H2 beats C1, each by 1/9.
    """
    s = make_source([_F(1, 3), _F(1, 3), _F(1, 9), _F(1, 9), _F(1, 18), _F(1, 18)],
                    labels=FOUR_CODES_LABELS)
    profiles = {name: tuple(lengths[x] for x in FOUR_CODES_LABELS)
                for name, lengths in FOUR_CODES_LENGTHS.items()}
    return s, profiles
