"""Sources, length profiles and exact Kraft/probability arithmetic.

Probabilities live either as :class:`fractions.Fraction` (exact mode, the
default) or as Python floats (float mode, used by the Monte Carlo sampler).
Length profiles are plain tuples of ints aligned with the source order, and
symbol sets are frozensets of indices.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence, Union

Number = Union[Fraction, float]
LengthProfile = tuple[int, ...]
SymbolSet = frozenset[int]

DEFAULT_EPSILON = 1e-12


class CompAdvError(Exception):
    """Base class for domain errors raised by this package."""


class NonPositiveProbability(CompAdvError):
    pass


class BadTotal(CompAdvError):
    pass


class InvalidProfile(CompAdvError):
    pass


class SizeMismatch(CompAdvError):
    pass


class TooLarge(CompAdvError):
    pass


@dataclass(frozen=True)
class NumericMode:
    """Exact rational arithmetic, or floats compared with a tolerance."""

    kind: str = "exact"
    epsilon: float = 0.0

    def __post_init__(self):
        if self.kind not in ("exact", "float"):
            raise ValueError(f"unknown numeric mode {self.kind!r}")
        if self.kind == "exact" and self.epsilon != 0:
            raise ValueError("exact mode has no tolerance")
        if self.epsilon < 0:
            raise ValueError("epsilon must be nonnegative")

    @classmethod
    def float_mode(cls, epsilon: float = DEFAULT_EPSILON) -> "NumericMode":
        return cls("float", epsilon)

    @property
    def is_exact(self) -> bool:
        return self.kind == "exact"


EXACT = NumericMode()
FLOAT = NumericMode.float_mode()


@dataclass(frozen=True)
class Source:
    probabilities: tuple
    mode: NumericMode = EXACT
    labels: tuple | None = field(default=None, compare=False)

    @property
    def n(self) -> int:
        return len(self.probabilities)

    def __len__(self):
        return len(self.probabilities)

    def __getitem__(self, i):
        return self.probabilities[i]

    @property
    def epsilon(self):
        # integer zero in exact mode keeps Fraction arithmetic exact
        return self.mode.epsilon if not self.mode.is_exact else 0

    def full_set(self) -> SymbolSet:
        return frozenset(range(self.n))

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else str(i)

    def index_of(self, label: str) -> int:
        if not self.labels:
            raise KeyError(label)
        return self.labels.index(label)


def to_fraction(x) -> Fraction:
    """Exact conversion; floats are read through their shortest repr so 0.4 -> 2/5."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not probabilities")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(repr(x))
    if isinstance(x, str):
        return parse_rational(x)
    return Fraction(x)


def make_source(probs: Iterable, mode: NumericMode = EXACT,
                labels: Sequence[str] | None = None) -> Source:
    probs = list(probs)
    if not probs:
        raise ValueError("a source needs at least one symbol")
    if mode.is_exact:
        values = tuple(to_fraction(p) for p in probs)
    else:
        values = tuple(float(to_fraction(p)) if isinstance(p, str) else float(p)
                       for p in probs)
    for i, p in enumerate(values):
        if p <= 0:
            raise NonPositiveProbability(f"symbol {i} has probability {p}")
    total = sum(values)
    if mode.is_exact:
        if total != 1:
            raise BadTotal(f"probabilities sum to {total}, not 1")
    elif abs(total - 1.0) > max(mode.epsilon, len(values) * 2.3e-16):
        raise BadTotal(f"probabilities sum to {total!r}, not 1")
    if labels is not None:
        labels = tuple(labels)
        if len(labels) != len(values):
            raise SizeMismatch("one label per symbol")
    return Source(values, mode, labels)


def _is_power_of_half(p: Fraction) -> bool:
    # p = 2^-k with k >= 0  <=>  numerator 1, denominator a power of two
    return p.numerator == 1 and p.denominator & (p.denominator - 1) == 0


def is_dyadic(s: Source) -> bool:
    if s.mode.is_exact:
        return all(_is_power_of_half(p) for p in s.probabilities)
    for p in s.probabilities:
        if p > 1 + s.epsilon:
            return False
        k = round(-math.log2(p))
        if k < 0 or abs(p - 2.0 ** -k) > s.epsilon:
            return False
    return True


def check_indices(a: Iterable[int], n: int) -> SymbolSet:
    a = frozenset(a)
    for i in a:
        if not 0 <= i < n:
            raise IndexError(f"symbol index {i} outside [0, {n})")
    return a


def check_profile(lengths: Iterable[int], n: int | None = None) -> LengthProfile:
    """Validate and normalise a length profile; returns a tuple."""
    p = tuple(int(x) for x in lengths)
    if n is not None and len(p) != n:
        raise SizeMismatch(f"profile has {len(p)} lengths, source has {n} symbols")
    if not p:
        raise InvalidProfile("empty profile")
    if any(x < 0 for x in p):
        raise InvalidProfile("negative codeword length")
    if 0 in p and len(p) != 1:
        raise InvalidProfile("length 0 is only allowed for a single-symbol source")
    if kraft_sum(p) > 1:
        raise InvalidProfile(f"profile {p} violates the Kraft inequality")
    return p


def kraft_sum(p: Sequence[int], a: Iterable[int] | None = None) -> Fraction:
    """Exact sum of 2^-l over the members of ``a`` (all symbols when omitted)."""
    idx = range(len(p)) if a is None else check_indices(a, len(p))
    if not idx:
        return Fraction(0)
    top = max(p[i] for i in idx)
    return Fraction(sum(1 << (top - p[i]) for i in idx), 1 << top)


def kraft_units(p: Sequence[int]) -> tuple[list[int], int]:
    """Integer Kraft weights 2^(L-l) and the scale 2^L, L = max length."""
    top = max(p)
    return [1 << (top - x) for x in p], 1 << top


def probability(s: Source, a: Iterable[int]) -> Number:
    a = check_indices(a, s.n)
    zero = Fraction(0) if s.mode.is_exact else 0.0
    return sum((s.probabilities[i] for i in sorted(a)), zero)


def entropy(s: Source) -> float:
    return sum(float(p) * -math.log2(float(p)) for p in s.probabilities)


def integer_weights(s: Source) -> tuple[list[int], int]:
    """Exact-mode probabilities as integers over a common denominator."""
    den = reduce(math.lcm, (p.denominator for p in s.probabilities), 1)
    return [p.numerator * (den // p.denominator) for p in s.probabilities], den


def mask_of(a: Iterable[int]) -> int:
    m = 0
    for i in a:
        m |= 1 << i
    return m


def members(mask: int) -> SymbolSet:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


# serialization

def format_rational(r) -> str:
    return str(Fraction(r))


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


def format_number(x, as_float: bool = False):
    if as_float or isinstance(x, float):
        return float(x)
    return format_rational(x)


def source_to_dict(s: Source) -> dict:
    d = {"mode": s.mode.kind,
         "probabilities": [format_number(p) for p in s.probabilities]}
    if s.labels:
        d["labels"] = list(s.labels)
    return d


def source_from_dict(d) -> Source:
    if isinstance(d, list):
        return make_source(d)
    mode = NumericMode.float_mode() if d.get("mode", "exact") == "float" else EXACT
    return make_source(d["probabilities"], mode, d.get("labels"))


def source_to_json(s: Source) -> str:
    return json.dumps(source_to_dict(s))


def source_from_json(text: str) -> Source:
    return source_from_dict(json.loads(text))
