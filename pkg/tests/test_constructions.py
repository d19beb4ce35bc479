import pytest

from chibound.constructions import (cycle, extremal_even,
                                    extremal_odd, extremal_omega5, wheel6)
from chibound.graphs import complete_graph, serialize_graph6
from chibound.invariants import bound_f, chi_via_matching, clique_number
from chibound.patterns import check_membership, is_class_member

# Locked after the first verified construction (degree, omega, chi and
# membership all re-checked below and in the acceptance suite).
OMEGA5_GOLDEN_GRAPH6 = "O^~^^mwbkjs^Pv[ZlUyxv"


class TestBuildingBlocks:
    def test_triangle(self):
        assert cycle(3) == complete_graph(3)

    def test_c5(self):
        g = cycle(5)
        assert clique_number(g) == 2
        assert chi_via_matching(g)[0] == 3
        assert is_class_member(g)

    def test_c6_excluded(self):
        assert not is_class_member(cycle(6))

    def test_cycle_validation(self):
        with pytest.raises(ValueError):
            cycle(2)

    def test_wheel(self):
        g = wheel6()
        assert (g.n, g.edge_count()) == (6, 10)
        assert clique_number(g) == 3
        assert chi_via_matching(g)[0] == 4
        assert is_class_member(g)


class TestExtremalEven:
    @pytest.mark.parametrize("r,omega,chi", [(1, 2, 3), (2, 4, 6), (3, 6, 9)])
    def test_invariants(self, r, omega, chi):
        g = extremal_even(r)
        assert g.n == 5 * r
        assert clique_number(g) == omega
        assert chi_via_matching(g)[0] == chi

    def test_r2_tight_for_bound(self):
        assert chi_via_matching(extremal_even(2))[0] == bound_f(4) == 6

    def test_r1_is_member(self):
        assert is_class_member(extremal_even(1))

    def test_r2_leaves_class(self):
        # The join of two pentagons induces the 5-vertex pattern; the
        # family realizes the bound arithmetic but not class membership.
        w = check_membership(extremal_even(2))
        assert w is not None and w.kind == "TwoK1JoinK2K1"

    def test_size_validation(self):
        with pytest.raises(ValueError):
            extremal_even(0)
        with pytest.raises(ValueError):
            extremal_even(13)


class TestExtremalOdd:
    @pytest.mark.parametrize("m,omega,chi", [(1, 3, 4), (2, 5, 7), (3, 7, 10)])
    def test_invariants(self, m, omega, chi):
        g = extremal_odd(m)
        assert g.n == 5 * (m - 1) + 6
        assert clique_number(g) == omega
        assert chi_via_matching(g)[0] == chi

    def test_tightness_pattern(self):
        assert chi_via_matching(extremal_odd(1))[0] == bound_f(3) == 4
        assert chi_via_matching(extremal_odd(3))[0] == bound_f(7) == 10
        # m=2 reaches 7 < f(5) = 8: omega=5 tightness belongs to the
        # 16-vertex table graph.
        assert chi_via_matching(extremal_odd(2))[0] == 7 < bound_f(5)

    def test_m1_is_member(self):
        assert is_class_member(extremal_odd(1))


class TestOmega5Graph:
    def test_golden_graph6(self):
        assert serialize_graph6(extremal_omega5()) == OMEGA5_GOLDEN_GRAPH6

    def test_ten_regular(self):
        g = extremal_omega5()
        assert all(g.degree(v) == 10 for v in range(16))

    def test_invariants(self):
        g = extremal_omega5()
        assert clique_number(g) == 5
        assert chi_via_matching(g)[0] == 8 == bound_f(5)
        assert is_class_member(g)

    def test_five_non_neighbors_each(self):
        from chibound.constructions import OMEGA5_VERTEX_NAMES
        g = extremal_omega5()
        idx = {name: i for i, name in enumerate(OMEGA5_VERTEX_NAMES)}
        for v in range(16):
            assert 16 - 1 - g.degree(v) == 5
        b1_non = {u for u in range(16)
                  if u != idx["b1"] and not g.has_edge(idx["b1"], u)}
        assert b1_non == {idx[s] for s in ("w", "c1", "y1p", "y2p", "y3p")}
