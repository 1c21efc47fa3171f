"""Optimality verdicts and the certificates that back them."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Union

from .core import LengthProfile, SymbolSet


class Status(Enum):
    OPTIMAL = "optimal"
    NOT_OPTIMAL = "not_optimal"
    UNKNOWN = "unknown"


class Method(Enum):
    SUBSET_EXACT = "subset"
    LEAF_CONDITION = "leaf"
    BRUTE_FORCE = "brute"
    HEXAHEDRON = "hexahedron"
    SMALL_N = "small-n"


@dataclass(frozen=True)
class SubsetPair:
    """Disjoint U, V with K(U) < K(V) but P(U) > P(V)."""
    u: SymbolSet
    v: SymbolSet

    def to_dict(self):
        return {"kind": "subset_pair", "u": sorted(self.u), "v": sorted(self.v)}


@dataclass(frozen=True)
class DominatingProfile:
    profile: LengthProfile

    def to_dict(self):
        return {"kind": "dominating_profile", "profile": list(self.profile)}


@dataclass(frozen=True)
class LeafTriple:
    """Sibling nodes y, y_sib of a Huffman tree and a leaf symbol z under y."""
    y: int
    y_sib: int
    z: int

    def to_dict(self):
        return {"kind": "leaf_triple", "y": self.y, "y_sib": self.y_sib, "z": self.z}


Certificate = Union[SubsetPair, DominatingProfile, LeafTriple]


@dataclass(frozen=True)
class OptimalityVerdict:
    status: Status
    method: Method
    certificate: Certificate | None = None

    def __post_init__(self):
        if self.status is Status.NOT_OPTIMAL and self.certificate is None:
            raise ValueError("a NotOptimal verdict needs a certificate")
        if self.method is Method.LEAF_CONDITION and self.status is Status.OPTIMAL:
            raise ValueError("the leaf condition cannot certify optimality")

    @property
    def is_optimal(self) -> bool:
        return self.status is Status.OPTIMAL

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "method": self.method.value,
            "certificate": None if self.certificate is None else self.certificate.to_dict(),
        }


def certificate_from_dict(d: dict | None) -> Certificate | None:
    if d is None:
        return None
    kind = d["kind"]
    if kind == "subset_pair":
        return SubsetPair(frozenset(d["u"]), frozenset(d["v"]))
    if kind == "dominating_profile":
        return DominatingProfile(tuple(d["profile"]))
    if kind == "leaf_triple":
        return LeafTriple(d["y"], d["y_sib"], d["z"])
    raise ValueError(f"unknown certificate kind {kind!r}")


def verdict_from_dict(d: dict) -> OptimalityVerdict:
    return OptimalityVerdict(Status(d["status"]), Method(d["method"]),
                             certificate_from_dict(d.get("certificate")))
