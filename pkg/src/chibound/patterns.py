"""Forbidden-pattern detection and class membership.

The class is defined by two forbidden induced subgraphs: the independent
triple, and the 5-vertex pattern obtained by joining two isolated vertices
to (an edge plus an isolated vertex).  A graph is a member iff it contains
neither.  ``complement_oracle_check`` re-decides membership on the
complement only (triangle search plus induced edge-plus-path search) and is
used as an independent cross-check of the direct finders.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .graphs import Graph, bits, complement

THREE_K1 = "ThreeK1"
TWO_K1_JOIN_K2_K1 = "TwoK1JoinK2K1"


@dataclass(frozen=True, slots=True)
class PatternWitness:
    """Vertex tuple certifying an induced forbidden subgraph.

    For the 5-vertex kind, ``roles`` is (u1, u2, a, b, c): u1u2 is the
    independent pair, ab the edge, c the extra vertex; the induced edges are
    exactly u1a, u1b, u1c, u2a, u2b, u2c, ab.
    """

    kind: str
    vertices: tuple[int, ...]
    roles: Optional[tuple[int, int, int, int, int]] = None

    def to_json_dict(self) -> dict:
        d: dict = {"kind": self.kind, "vertices": list(self.vertices)}
        if self.roles is not None:
            u1, u2, a, b, c = self.roles
            d["roles"] = {"u1": u1, "u2": u2, "a": a, "b": b, "c": c}
        return d


def witness_is_valid(g: Graph, w: PatternWitness) -> bool:
    """Re-check a witness against the graph, independent of the finders."""
    if len(set(w.vertices)) != len(w.vertices):
        return False
    if any(not 0 <= v < g.n for v in w.vertices):
        return False
    if w.kind == THREE_K1:
        if len(w.vertices) != 3:
            return False
        x, y, z = w.vertices
        return not (g.has_edge(x, y) or g.has_edge(x, z) or g.has_edge(y, z))
    if w.kind == TWO_K1_JOIN_K2_K1:
        if w.roles is None or len(w.vertices) != 5:
            return False
        u1, u2, a, b, c = w.roles
        if set(w.roles) != set(w.vertices):
            return False
        required = {(u1, a), (u1, b), (u1, c), (u2, a), (u2, b), (u2, c), (a, b)}
        for p, q in combinations(w.roles, 2):
            present = g.has_edge(p, q)
            if ((p, q) in required or (q, p) in required) != present:
                return False
        return True
    return False


def find_3K1(g: Graph) -> Optional[PatternWitness]:
    """Lexicographically smallest independent triple, if any."""
    adj = g.adj
    full = g.full_mask
    for u in range(g.n - 2):
        non_u = ~adj[u] & full & ~((1 << (u + 1)) - 1)
        for v in bits(non_u):
            rest = non_u & ~adj[v] & ~((1 << (v + 1)) - 1)
            if rest:
                w = (rest & -rest).bit_length() - 1
                return PatternWitness(THREE_K1, (u, v, w))
    return None


def _iter_5pattern_roles(g: Graph):
    """Yield every (u1, u2, a, b, c) role tuple realizing the 5-pattern.

    Every occurrence has a unique non-adjacent pair {u1, u2} joined to all
    of {a, b, c}, with ab the only edge among {a, b, c}; so scanning
    non-adjacent pairs and edges inside their common neighborhood is
    exhaustive.
    """
    adj = g.adj
    full = g.full_mask
    for u1 in range(g.n - 1):
        non_u1 = ~adj[u1] & full & ~((1 << (u1 + 1)) - 1)
        for u2 in bits(non_u1):
            common = adj[u1] & adj[u2]
            for a in bits(common):
                for b in bits(common & adj[a] & ~((1 << (a + 1)) - 1)):
                    cmask = common & ~adj[a] & ~adj[b] & ~(1 << a) & ~(1 << b)
                    for c in bits(cmask):
                        yield (u1, u2, a, b, c)


def has_forbidden_5pattern(g: Graph) -> bool:
    for _ in _iter_5pattern_roles(g):
        return True
    return False


def find_forbidden_5pattern(g: Graph) -> Optional[PatternWitness]:
    """Smallest witness under lexicographic 5-subset order, if any."""
    best = None
    for roles in _iter_5pattern_roles(g):
        key = (tuple(sorted(roles)), roles)
        if best is None or key < best:
            best = key
    if best is None:
        return None
    return PatternWitness(TWO_K1_JOIN_K2_K1, best[0], best[1])


def check_membership(g: Graph) -> Optional[PatternWitness]:
    """None for members, else the excluding witness (3K1 checked first)."""
    w = find_3K1(g)
    if w is not None:
        return w
    return find_forbidden_5pattern(g)


def is_class_member(g: Graph) -> bool:
    if find_3K1(g) is not None:
        return False
    return not has_forbidden_5pattern(g)


# ---------------------------------------------------------------------------
# Independent oracle on the complement.
#
# G contains an independent triple iff its complement contains a triangle.
# G contains the 5-pattern iff its complement contains an induced
# K2 union P3: re-deriving from the pattern's 7 edges, the complement on
# {u1,u2,a,b,c} has exactly the edges u1u2, ac, bc -- an edge disjoint from
# an induced 3-vertex path centered at c.

def _complement_has_triangle(h: Graph) -> bool:
    adj = h.adj
    for u in range(h.n):
        for v in bits(adj[u] & ~((1 << (u + 1)) - 1)):
            if adj[u] & adj[v]:
                return True
    return False


def _has_induced_k2_p3(h: Graph) -> bool:
    """Induced (edge) + (3-path) with no edges between the two parts.

    Only called on triangle-free graphs, where every 2-edge path is induced.
    """
    adj = h.adj
    full = h.full_mask
    for q in range(h.n):
        nq = adj[q]
        for p in bits(nq):
            for r in bits(nq & ~((1 << (p + 1)) - 1)):
                closed = adj[p] | nq | adj[r] | (1 << p) | (1 << q) | (1 << r)
                allowed = full & ~closed
                for x in bits(allowed):
                    if adj[x] & allowed & ~((1 << (x + 1)) - 1):
                        return True
    return False


def complement_oracle_check(g: Graph) -> bool:
    """Membership verdict computed only on the complement of g."""
    h = complement(g)
    if _complement_has_triangle(h):
        return False
    return not _has_induced_k2_p3(h)
