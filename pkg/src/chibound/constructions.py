"""Generators for the extremal families and standard building blocks.

Every generator self-verifies against the exact solvers (clique number,
matching-based chi, class membership) and raises ConstructionError on any
mismatch, so a misreading of a family definition fails loudly rather than
silently skewing a corpus.
"""
from __future__ import annotations

from functools import reduce

from .graphs import Graph, MAX_VERTICES, from_edges, join
from .invariants import chi_via_matching, clique_number
from .patterns import is_class_member


class ConstructionError(RuntimeError):
    """A generator's output failed its self-check."""


def cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError("cycles need at least 3 vertices")
    if k > MAX_VERTICES:
        raise ValueError(f"cycle size {k} exceeds {MAX_VERTICES} vertices")
    return from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def single_vertex() -> Graph:
    return from_edges(1, [])


def wheel6() -> Graph:
    """The 6-vertex wheel: a hub joined to a 5-cycle."""
    return join(single_vertex(), cycle(5))


def _verify(g: Graph, omega: int, chi: int, family: str,
            expect_member: bool = True) -> Graph:
    got_omega = clique_number(g)
    if got_omega != omega:
        raise ConstructionError(
            f"{family}: clique number {got_omega}, expected {omega}")
    # chi_via_matching raises if the graph has an independent triple, so
    # this doubles as a check that joins of pentagons stay triple-free.
    got_chi, _ = chi_via_matching(g)
    if got_chi != chi:
        raise ConstructionError(
            f"{family}: chromatic number {got_chi}, expected {chi}")
    if expect_member and not is_class_member(g):
        raise ConstructionError(f"{family}: output left the class")
    return g


def extremal_even(r: int) -> Graph:
    """Join of r pentagons: clique number 2r, chromatic number 3r.

    Caveat established computationally: for r >= 2 the join of two
    pentagons induces the 5-vertex forbidden pattern (independent pair
    from one factor, edge plus isolated vertex from another), so these
    graphs realize the bound arithmetic but sit outside the class.  Only
    r = 1 is a class member.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    if 5 * r > MAX_VERTICES:
        raise ValueError(f"5*{r} exceeds {MAX_VERTICES} vertices")
    g = reduce(join, [cycle(5)] * r)
    return _verify(g, 2 * r, 3 * r, f"extremal_even({r})", expect_member=r == 1)


def extremal_odd(m: int) -> Graph:
    """Join of m-1 pentagons with the 6-wheel: clique 2m+1, chi 3m+1.

    The parameter is the target odd clique number (2m+1); chi falls one
    short of the omega=5 bound at m=2, where tightness is carried by the
    16-vertex graph instead.  As with the even family, any join involving
    a pentagon factor induces the 5-vertex forbidden pattern, so only
    m = 1 (the bare 6-wheel) is a class member.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    n = 5 * (m - 1) + 6
    if n > MAX_VERTICES:
        raise ValueError(f"{n} exceeds {MAX_VERTICES} vertices")
    g = reduce(join, [cycle(5)] * (m - 1) + [wheel6()])
    return _verify(g, 2 * m + 1, 3 * m + 1, f"extremal_odd({m})",
                   expect_member=m == 1)


# Non-adjacency table of the 16-vertex graph with clique number 5 and
# chromatic number 8.  Vertex order: v, w, y1..y3, y1'..y3', b1..b4, c1..c4.
OMEGA5_VERTEX_NAMES = (
    "v", "w", "y1", "y2", "y3", "y1p", "y2p", "y3p",
    "b1", "b2", "b3", "b4", "c1", "c2", "c3", "c4",
)

_OMEGA5_NON_ADJACENCY = {
    "v": ("w", "c1", "c2", "c3", "c4"),
    "w": ("v", "b1", "b2", "b3", "b4"),
    "b1": ("w", "c1", "y1p", "y2p", "y3p"),
    "b2": ("w", "c2", "y1", "y2", "y3p"),
    "b3": ("w", "c3", "y1", "y2p", "y3"),
    "b4": ("w", "c4", "y1p", "y2", "y3"),
    "c1": ("v", "b1", "y1", "y2", "y3"),
    "c2": ("v", "b2", "y1p", "y2p", "y3"),
    "c3": ("v", "b3", "y1p", "y2", "y3p"),
    "c4": ("v", "b4", "y1", "y2p", "y3p"),
    "y1": ("y1p", "c1", "b2", "b3", "c4"),
    "y2": ("y2p", "c1", "b2", "c3", "b4"),
    "y3": ("y3p", "c1", "c2", "b3", "b4"),
    "y1p": ("y1", "b1", "c2", "c3", "b4"),
    "y2p": ("y2", "b1", "c2", "b3", "c4"),
    "y3p": ("y3", "b1", "b2", "c3", "c4"),
}


def extremal_omega5() -> Graph:
    """The 16-vertex, 10-regular graph attaining chi = 8 at clique number 5."""
    index = {name: i for i, name in enumerate(OMEGA5_VERTEX_NAMES)}
    non_adj: dict[str, set[str]] = {u: set(ts) for u, ts in _OMEGA5_NON_ADJACENCY.items()}
    for u, targets in non_adj.items():
        for t in targets:
            if u not in non_adj[t]:
                raise ConstructionError(
                    f"non-adjacency table asymmetric: {u} lists {t} but not back")
    n = 16
    edges = []
    for u in range(n):
        un = OMEGA5_VERTEX_NAMES[u]
        for v in range(u + 1, n):
            if OMEGA5_VERTEX_NAMES[v] not in non_adj[un]:
                edges.append((u, v))
    g = from_edges(n, edges)
    for u in range(n):
        if g.degree(u) != 10:
            raise ConstructionError(
                f"vertex {OMEGA5_VERTEX_NAMES[u]} has degree {g.degree(u)}, expected 10")
    return _verify(g, 5, 8, "extremal_omega5")
