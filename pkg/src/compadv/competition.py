"""One-on-one competitions between length profiles."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .core import (Source, SymbolSet, check_profile, format_number, probability)


class Dominance(Enum):
    STRICT = "strict"
    WEAK = "weak"
    DOMINATED = "dominated"


@dataclass(frozen=True)
class CompetitionResult:
    """Wins, losses and ties of the first profile against the second."""

    wins: SymbolSet
    losses: SymbolSet
    ties: SymbolSet
    p_win: object
    p_loss: object

    @property
    def advantage(self):
        return self.p_win - self.p_loss

    def to_dict(self, as_float: bool = False) -> dict:
        return {
            "wins": sorted(self.wins),
            "losses": sorted(self.losses),
            "ties": sorted(self.ties),
            "p_win": format_number(self.p_win, as_float),
            "p_loss": format_number(self.p_loss, as_float),
            "advantage": format_number(self.advantage, as_float),
        }


def compete(s: Source, a: Sequence[int], b: Sequence[int]) -> CompetitionResult:
    a = check_profile(a, s.n)
    b = check_profile(b, s.n)
    wins = frozenset(i for i in range(s.n) if a[i] < b[i])
    losses = frozenset(i for i in range(s.n) if a[i] > b[i])
    ties = frozenset(range(s.n)) - wins - losses
    return CompetitionResult(wins, losses, ties,
                             probability(s, wins), probability(s, losses))


def advantage(s: Source, a: Sequence[int], b: Sequence[int]):
    return compete(s, a, b).advantage


def dominates(r: CompetitionResult, epsilon: float = 0.0) -> Dominance:
    d = r.advantage
    if d > epsilon:
        return Dominance.STRICT
    if d < -epsilon:
        return Dominance.DOMINATED
    return Dominance.WEAK
