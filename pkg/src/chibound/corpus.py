"""Population generation and verification campaigns.

Populations are exhaustive labeled enumerations (n <= 7), seeded samples
(8 <= n <= 14, triangle-free complements filtered by the full membership
test), or explicit graph lists.  ``run_verification`` maps the requested
checks over a population and reduces to a CorpusReport whose violation
list the theorems predict to be empty.  The reduction is deterministic:
chunk results are merged in stream order, so worker count never changes a
reported value.
"""
from __future__ import annotations

import json
import random
import zlib
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .graphs import Graph, bits, is_connected, serialize_graph6
from .invariants import (DEFAULT_EXACT_LIMIT, bound_f, chi_via_matching,
                         chromatic_exact, clique_number)
from .patterns import complement_oracle_check, is_class_member
from .structure import (FAILS, HOLDS, PROPERTY_NAMES, VACUOUS,
                        all_partitioning_pairs, check_lemma1, decompose)

VALID_CHECKS = ("bound", "lemma1", "lemma2", "oracle")
ENUMERATION_LIMIT = 7
SAMPLE_MIN_N = 8
SAMPLE_MAX_N = 14
GIVE_UP_WINDOW = 20000
GIVE_UP_RATE = 0.001


def _pair_bits(n: int) -> list[tuple[int, int]]:
    return [(u, v) for v in range(1, n) for u in range(v)]


def graph_from_edge_mask(n: int, mask: int, pairs: list[tuple[int, int]]) -> Graph:
    adj = [0] * n
    while mask:
        low = mask & -mask
        u, v = pairs[low.bit_length() - 1]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        mask ^= low
    return Graph(n, tuple(adj))


def iter_all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices, ascending edge-bitmask order."""
    if n > ENUMERATION_LIMIT:
        raise ValueError(f"exhaustive enumeration limited to n <= {ENUMERATION_LIMIT}")
    pairs = _pair_bits(n)
    for mask in range(1 << len(pairs)):
        yield graph_from_edge_mask(n, mask, pairs)


def enumerate_class(n: int) -> Iterator[Graph]:
    """Every labeled class member on n vertices, exactly once."""
    for g in iter_all_graphs(n):
        if is_class_member(g):
            yield g


def sample_class(n: int, count: int, seed: int) -> Iterator[Graph]:
    """Seeded stream of class members on n vertices.

    Candidates are complements of greedily grown random triangle-free
    graphs (so they never contain an independent triple), then
    rejection-filtered on the full membership test.  Deterministic per
    seed; gives up if the sustained rejection rate exceeds 99.9%.
    """
    if not SAMPLE_MIN_N <= n <= SAMPLE_MAX_N:
        raise ValueError(f"sampling supports {SAMPLE_MIN_N} <= n <= {SAMPLE_MAX_N}")
    rng = random.Random(seed)
    base_pairs = _pair_bits(n)
    emitted = 0
    attempts = 0
    window_accepts = 0
    while emitted < count:
        pairs = base_pairs[:]
        rng.shuffle(pairs)
        comp = [0] * n
        for u, v in pairs:
            if not comp[u] & comp[v]:  # no common neighbor: stays triangle-free
                comp[u] |= 1 << v
                comp[v] |= 1 << u
        full = (1 << n) - 1
        g = Graph(n, tuple((full ^ (1 << v)) & ~comp[v] for v in range(n)))
        attempts += 1
        if is_class_member(g):
            emitted += 1
            window_accepts += 1
            yield g
        if attempts % GIVE_UP_WINDOW == 0:
            if window_accepts / GIVE_UP_WINDOW < GIVE_UP_RATE:
                raise RuntimeError(
                    f"sampler giving up at n={n}: {window_accepts} acceptances "
                    f"in the last {GIVE_UP_WINDOW} attempts "
                    f"({emitted}/{count} members emitted so far)")
            window_accepts = 0


# ---------------------------------------------------------------------------
# Populations

@dataclass(frozen=True)
class Population:
    mode: str  # "exhaustive" | "sample" | "explicit"
    n: int
    count: int = 0
    seed: int = 0
    graphs: tuple[Graph, ...] = ()

    def descriptor(self) -> dict:
        d: dict = {"mode": self.mode, "n": self.n}
        if self.mode == "sample":
            d["count"] = self.count
            d["seed"] = self.seed
        if self.mode == "explicit":
            d["count"] = len(self.graphs)
        return d

    def stream(self) -> Iterator[Graph]:
        """Graphs the checks run over; all labeled graphs in exhaustive mode
        (the oracle check wants non-members too), members otherwise."""
        if self.mode == "exhaustive":
            return iter_all_graphs(self.n)
        if self.mode == "sample":
            return sample_class(self.n, self.count, self.seed)
        return iter(self.graphs)


def exhaustive_population(n: int) -> Population:
    return Population("exhaustive", n)


def sample_population(n: int, count: int, seed: int) -> Population:
    return Population("sample", n, count=count, seed=seed)


def explicit_population(graphs: Iterable[Graph]) -> Population:
    gs = tuple(graphs)
    return Population("explicit", max((g.n for g in gs), default=0), graphs=gs)


# ---------------------------------------------------------------------------
# Per-chunk verification worker and deterministic reduction.

def _new_accumulator(checks: tuple[str, ...]) -> dict:
    acc: dict = {
        "graphs": 0,
        "members": 0,
        "disconnected_members": 0,
        "omega_histogram": {},
        "violations": [],
    }
    if "oracle" in checks:
        acc["oracle"] = {"checked": 0, "disagreements": 0}
    if "lemma1" in checks:
        acc["lemma1"] = {
            "pairs_checked": 0,
            "properties": {p: {HOLDS: 0, VACUOUS: 0, FAILS: 0} for p in PROPERTY_NAMES},
        }
    if "lemma2" in checks:
        acc["lemma2"] = {"checked": 0}
    return acc


def _check_graph(g: Graph, checks: tuple[str, ...], acc: dict,
                 exact_limit: int = DEFAULT_EXACT_LIMIT) -> None:
    acc["graphs"] += 1
    member = is_class_member(g)
    if "oracle" in checks:
        acc["oracle"]["checked"] += 1
        if complement_oracle_check(g) != member:
            acc["oracle"]["disagreements"] += 1
            acc["violations"].append({
                "check": "oracle",
                "graph6": serialize_graph6(g),
                "detail": f"direct={member}, complement oracle={not member}",
            })
    if not member:
        return
    acc["members"] += 1
    connected = is_connected(g)
    if not connected:
        acc["disconnected_members"] += 1

    need_invariants = "bound" in checks or "lemma2" in checks
    if need_invariants:
        omega = clique_number(g)
        chi, _ = chi_via_matching(g)
    if "bound" in checks:
        bound = bound_f(omega)
        hist = acc["omega_histogram"].setdefault(
            omega, {"count": 0, "max_chi": 0, "bound": bound, "violations": 0})
        hist["count"] += 1
        hist["max_chi"] = max(hist["max_chi"], chi)
        if chi > bound:
            hist["violations"] += 1
            acc["violations"].append({
                "check": "bound",
                "graph6": serialize_graph6(g),
                "detail": f"chi={chi} exceeds f({omega})={bound}",
            })
        # Cross-check the matching engine on a deterministic 1% subsample.
        if g.n <= exact_limit and _crosscheck_selected(g):
            exact_chi, _ = chromatic_exact(g, limit=exact_limit)
            if exact_chi != chi:
                acc["violations"].append({
                    "check": "engine",
                    "graph6": serialize_graph6(g),
                    "detail": f"matching chi={chi}, exact chi={exact_chi}",
                })
    if "lemma2" in checks and connected and omega == 3:
        acc["lemma2"]["checked"] += 1
        problems = []
        if g.max_degree() > 5:
            problems.append(f"delta={g.max_degree()}")
        if g.n > 8:
            problems.append(f"n={g.n}")
        if chi > 4:
            problems.append(f"chi={chi}")
        if problems:
            acc["violations"].append({
                "check": "lemma2",
                "graph6": serialize_graph6(g),
                "detail": ", ".join(problems),
            })
    if "lemma1" in checks:
        for v, w in all_partitioning_pairs(g):
            acc["lemma1"]["pairs_checked"] += 1
            dec = decompose(g, v, w, check_class=False)
            report = check_lemma1(g, dec)
            for name, verdict in report.properties:
                acc["lemma1"]["properties"][name][verdict.status] += 1
                if verdict.status == FAILS:
                    acc["violations"].append({
                        "check": "lemma1",
                        "graph6": serialize_graph6(g),
                        "detail": (f"property {name} fails at pair ({v},{w}), "
                                   f"witness {list(verdict.witness)}"),
                    })


def _crosscheck_selected(g: Graph) -> bool:
    # Deterministic, worker- and run-independent 1% selection.
    return zlib.crc32(serialize_graph6(g).encode()) % 100 == 0


def _merge(total: dict, part: dict) -> None:
    total["graphs"] += part["graphs"]
    total["members"] += part["members"]
    total["disconnected_members"] += part["disconnected_members"]
    for omega, h in part["omega_histogram"].items():
        t = total["omega_histogram"].setdefault(
            omega, {"count": 0, "max_chi": 0, "bound": h["bound"], "violations": 0})
        t["count"] += h["count"]
        t["max_chi"] = max(t["max_chi"], h["max_chi"])
        t["violations"] += h["violations"]
    total["violations"].extend(part["violations"])
    if "oracle" in part:
        total["oracle"]["checked"] += part["oracle"]["checked"]
        total["oracle"]["disagreements"] += part["oracle"]["disagreements"]
    if "lemma1" in part:
        total["lemma1"]["pairs_checked"] += part["lemma1"]["pairs_checked"]
        for name, counts in part["lemma1"]["properties"].items():
            for status, k in counts.items():
                total["lemma1"]["properties"][name][status] += k
    if "lemma2" in part:
        total["lemma2"]["checked"] += part["lemma2"]["checked"]


def _run_chunk(args: tuple[tuple[Graph, ...], tuple[str, ...]]) -> dict:
    graphs, checks = args
    acc = _new_accumulator(checks)
    for g in graphs:
        _check_graph(g, checks, acc)
    return acc


def _chunked(stream: Iterator[Graph], size: int) -> Iterator[tuple[Graph, ...]]:
    chunk = []
    for g in stream:
        chunk.append(g)
        if len(chunk) == size:
            yield tuple(chunk)
            chunk = []
    if chunk:
        yield tuple(chunk)


@dataclass(frozen=True)
class CorpusReport:
    population: dict
    checks: tuple[str, ...]
    graphs: int
    members: int
    disconnected_members: int
    omega_histogram: dict
    violations: list
    oracle: Optional[dict] = None
    lemma1: Optional[dict] = None
    lemma2: Optional[dict] = None

    @property
    def has_violations(self) -> bool:
        return bool(self.violations)

    def to_json_dict(self) -> dict:
        d: dict = {
            "population": self.population,
            "checks": list(self.checks),
            "graphs": self.graphs,
            "members": self.members,
            "disconnected_members": self.disconnected_members,
            "omega_histogram": {
                str(k): self.omega_histogram[k] for k in sorted(self.omega_histogram)
            },
        }
        if self.oracle is not None:
            d["oracle"] = self.oracle
        if self.lemma1 is not None:
            d["lemma1"] = self.lemma1
        if self.lemma2 is not None:
            d["lemma2"] = self.lemma2
        d["violations"] = self.violations
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def run_verification(population: Population,
                     checks: Iterable[str] = ("bound",),
                     jobs: int = 1,
                     chunk_size: int = 4096) -> CorpusReport:
    checks_t = tuple(dict.fromkeys(
        "lemma2" if c == "lemma2_scope" else c for c in checks))
    for c in checks_t:
        if c not in VALID_CHECKS:
            raise ValueError(f"unknown check {c!r}; valid: {VALID_CHECKS}")
    total = _new_accumulator(checks_t)
    chunks = _chunked(population.stream(), chunk_size)
    if jobs <= 1:
        for chunk in chunks:
            _merge(total, _run_chunk((chunk, checks_t)))
    else:
        import multiprocessing
        with multiprocessing.Pool(jobs) as pool:
            for part in pool.imap(_run_chunk,
                                  ((chunk, checks_t) for chunk in chunks)):
                _merge(total, part)
    return CorpusReport(
        population=population.descriptor(),
        checks=checks_t,
        graphs=total["graphs"],
        members=total["members"],
        disconnected_members=total["disconnected_members"],
        omega_histogram=total["omega_histogram"],
        violations=total["violations"],
        oracle=total.get("oracle"),
        lemma1=total.get("lemma1"),
        lemma2=total.get("lemma2"),
    )
