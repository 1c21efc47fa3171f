"""Monte Carlo experiments over flat-Dirichlet sources.

Randomness comes from Philox keyed by (seed, n). Sample i of size n owns the
counter blocks [i*B, (i+1)*B) with B = ceil(n/4), so every sample is a pure
function of (seed, n, i) and results do not depend on chunking or threads.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from .coding import huffman
from .core import DEFAULT_EPSILON, FLOAT, CompAdvError, Source, make_source
from .families import N4Class, classify_n4
from .kraft import SUBSET_GUARD, LeafScope, leaf_condition, subset_certificate
from .verdict import Method, Status

CHUNK = 1 << 14
THREADS_ENV = "COMPADV_THREADS"
SIM_METHODS = (Method.LEAF_CONDITION, Method.SUBSET_EXACT, Method.HEXAHEDRON)
CSV_HEADER = ["n", "samples", "flagged", "fraction", "method", "seed"]


class ConfigError(CompAdvError):
    pass


@dataclass(frozen=True)
class ExperimentConfig:
    n_min: int
    n_max: int
    samples_per_n: int
    seed: int
    method: Method = Method.LEAF_CONDITION
    leaf_scope: LeafScope = LeafScope.ROOT

    def __post_init__(self):
        if not 1 <= self.n_min <= self.n_max:
            raise ConfigError(f"need 1 <= n_min <= n_max, got {self.n_min}..{self.n_max}")
        if self.samples_per_n < 1:
            raise ConfigError("samples_per_n must be positive")
        if not 0 <= self.seed < 2 ** 64:
            raise ConfigError("seed must be a 64-bit unsigned integer")
        if self.method not in SIM_METHODS:
            raise ConfigError(f"method {self.method.value!r} is not available for simulation")
        if self.method is Method.SUBSET_EXACT and self.n_max > SUBSET_GUARD:
            raise ConfigError(f"subset method is limited to n <= {SUBSET_GUARD}")
        if self.method is Method.HEXAHEDRON and (self.n_min, self.n_max) != (4, 4):
            raise ConfigError("hexahedron method only applies to n = 4")

    def to_dict(self) -> dict:
        d = asdict(self)
        d["method"] = self.method.value
        d["leaf_scope"] = self.leaf_scope.value
        return d

    @property
    def method_label(self) -> str:
        if self.method is Method.LEAF_CONDITION and self.leaf_scope is LeafScope.ALL:
            return "leaf-all"
        return self.method.value

    @classmethod
    def from_dict(cls, d: dict) -> "ExperimentConfig":
        return cls(int(d["n_min"]), int(d["n_max"]), int(d["samples_per_n"]),
                   int(d["seed"]), Method(d["method"]),
                   LeafScope(d.get("leaf_scope", LeafScope.ROOT.value)))


@dataclass(frozen=True)
class ReportRow:
    n: int
    samples: int
    flagged: int

    @property
    def fraction(self) -> float:
        return self.flagged / self.samples


@dataclass(frozen=True)
class SimulationReport:
    config: ExperimentConfig
    rows: tuple[ReportRow, ...]
    wall_clock: tuple[float, ...] = field(default=(), compare=False)

    def row(self, n: int) -> ReportRow:
        return next(r for r in self.rows if r.n == n)

    def to_dict(self) -> dict:
        return {
            "config": self.config.to_dict(),
            "rows": [{"n": r.n, "samples": r.samples, "flagged": r.flagged,
                      "fraction": r.fraction} for r in self.rows],
            "wall_clock": list(self.wall_clock),
        }


def _blocks(n: int) -> int:
    return (n + 3) // 4


def _key(seed: int, n: int) -> int:
    return seed | (n << 64)


def sample_stream(seed: int, n: int, index: int = 0) -> np.random.Philox:
    """Bit generator positioned at sample ``index`` of size-n draws."""
    return np.random.Philox(key=_key(seed, n), counter=index * _blocks(n))


def _uniforms(raw: np.ndarray) -> np.ndarray:
    # midpoints of 2^-53 cells, so strictly inside (0, 1)
    return ((raw >> np.uint64(11)).astype(np.float64) + 0.5) * 2.0 ** -53


def _normalise(u: np.ndarray) -> np.ndarray:
    e = -np.log(u)
    return e / e.sum(axis=-1, keepdims=True)


def sample_dirichlet(n: int, rng_stream) -> Source:
    """One flat-Dirichlet source from normalised unit-mean exponentials.

    ``rng_stream`` is a numpy bit generator (or a Generator wrapping one); it
    is advanced by exactly one sample's worth of counter blocks.
    """
    if n < 1:
        raise ValueError("n must be positive")
    bitgen = getattr(rng_stream, "bit_generator", rng_stream)
    raw = bitgen.random_raw(4 * _blocks(n))[:n]
    return make_source(_normalise(_uniforms(raw)).tolist(), FLOAT)


def sample_batch(seed: int, n: int, start: int, count: int) -> np.ndarray:
    """Samples start..start+count-1 as rows of a (count, n) array."""
    b = _blocks(n)
    raw = sample_stream(seed, n, start).random_raw(count * 4 * b).reshape(count, 4 * b)
    return _normalise(_uniforms(raw[:, :n]))


def leaf_flags(p: np.ndarray, epsilon: float = DEFAULT_EPSILON,
               scope: LeafScope = LeafScope.ROOT) -> np.ndarray:
    """Leaf condition on the canonical Huffman tree of every row at once.

    With ``LeafScope.ROOT`` only the final merge (the root's children) is
    tested; ``LeafScope.ALL`` tests every sibling pair.

    Ties go to the lowest node id, as in the scalar construction, because
    argmin returns the first minimum and nodes are numbered in creation order.
    """
    m, n = p.shape
    flagged = np.zeros(m, dtype=bool)
    if n < 2:
        return flagged
    w = np.full((m, 2 * n - 1), np.inf)
    w[:, :n] = p
    low = np.full((m, 2 * n - 1), np.inf)
    low[:, :n] = p
    rows = np.arange(m)
    for t in range(n - 1):
        a = np.argmin(w, axis=1)
        wa = w[rows, a]
        w[rows, a] = np.inf
        b = np.argmin(w, axis=1)
        wb = w[rows, b]
        w[rows, b] = np.inf
        la, lb = low[rows, a], low[rows, b]
        if scope is LeafScope.ALL or t == n - 2:
            flagged |= (la < wa - wb - epsilon) | (lb < wb - wa - epsilon)
        w[:, n + t] = wa + wb
        low[:, n + t] = np.minimum(la, lb)
    return flagged


def hexahedron_flags(p: np.ndarray, epsilon: float = DEFAULT_EPSILON) -> np.ndarray:
    """Rows strictly inside the n = 4 non-optimality region."""
    q = -np.sort(-p, axis=1)
    upper = q[:, 1] + q[:, 2] - q[:, 0]
    lower = q[:, 0] - q[:, 2] - q[:, 3]
    return (upper > epsilon) & (lower > epsilon)


def is_flagged(s: Source, method: Method, scope: LeafScope = LeafScope.ROOT) -> bool:
    """Scalar reference for one sampled source: is it certified not optimal?"""
    if method is Method.LEAF_CONDITION:
        return leaf_condition(s, huffman(s)[0], scope).status is Status.NOT_OPTIMAL
    if method is Method.SUBSET_EXACT:
        return subset_certificate(s, huffman(s)[1]).status is Status.NOT_OPTIMAL
    if method is Method.HEXAHEDRON:
        ranked = Source(tuple(sorted(s.probabilities, reverse=True)), s.mode)
        return classify_n4(ranked) is N4Class.NOT_OPTIMAL
    raise ConfigError(f"method {method.value!r} is not available for simulation")


def _count_chunk(cfg: ExperimentConfig, n: int, start: int, count: int) -> int:
    p = sample_batch(cfg.seed, n, start, count)
    if cfg.method is Method.LEAF_CONDITION:
        return int(leaf_flags(p, scope=cfg.leaf_scope).sum())
    if cfg.method is Method.HEXAHEDRON:
        return int(hexahedron_flags(p).sum())
    return sum(is_flagged(make_source(row.tolist(), FLOAT), cfg.method) for row in p)


def default_threads() -> int:
    env = os.environ.get(THREADS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def run_experiment(cfg: ExperimentConfig, threads: int | None = None) -> SimulationReport:
    threads = default_threads() if threads is None else max(1, threads)
    rows, clock = [], []
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for n in range(cfg.n_min, cfg.n_max + 1):
            t0 = time.perf_counter()
            chunks = [(s, min(CHUNK, cfg.samples_per_n - s))
                      for s in range(0, cfg.samples_per_n, CHUNK)]
            counts = pool.map(lambda c: _count_chunk(cfg, n, *c), chunks)
            rows.append(ReportRow(n, cfg.samples_per_n, sum(counts)))
            clock.append(time.perf_counter() - t0)
    return SimulationReport(cfg, tuple(rows), tuple(clock))


def format_csv(r: SimulationReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for row in r.rows:
        w.writerow([row.n, row.samples, row.flagged, f"{row.fraction:.6f}",
                    r.config.method_label, r.config.seed])
    return buf.getvalue()


def write_report(r: SimulationReport, path, fmt: str | None = None) -> None:
    path = Path(path)
    fmt = fmt or ("json" if path.suffix.lower() == ".json" else "csv")
    if fmt == "json":
        path.write_text(json.dumps(r.to_dict(), indent=2) + "\n")
    elif fmt == "csv":
        path.write_text(format_csv(r))
    else:
        raise ValueError(f"unknown report format {fmt!r}")


def parse_csv(text: str) -> SimulationReport:
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {reader.fieldnames}")
    recs = list(reader)
    if not recs:
        raise ValueError("report has no rows")
    rows = tuple(ReportRow(int(x["n"]), int(x["samples"]), int(x["flagged"])) for x in recs)
    label = recs[0]["method"]
    scope = LeafScope.ALL if label == "leaf-all" else LeafScope.ROOT
    method = Method.LEAF_CONDITION if label == "leaf-all" else Method(label)
    cfg = ExperimentConfig(min(r.n for r in rows), max(r.n for r in rows), rows[0].samples,
                           int(recs[0]["seed"]), method, scope)
    return SimulationReport(cfg, rows)


def read_report(path) -> SimulationReport:
    path = Path(path)
    text = path.read_text()
    if path.suffix.lower() == ".json":
        d = json.loads(text)
        rows = tuple(ReportRow(x["n"], x["samples"], x["flagged"]) for x in d["rows"])
        return SimulationReport(ExperimentConfig.from_dict(d["config"]), rows,
                                tuple(d.get("wall_clock", ())))
    return parse_csv(text)


def standard_error(fraction: float, samples: int) -> float:
    return math.sqrt(fraction * (1 - fraction) / samples)
