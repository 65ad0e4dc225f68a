"""Property-based checks with randomly generated graphs."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from starfactor.classifier import Verdict, classify
from starfactor.factors import (
    VacuousGraph,
    edge_count_spectrum,
    enumerate_star_factors,
)
from starfactor.graph import (
    Graph,
    classify_vertices,
    connected_components,
    delete_edges,
    girth,
    parse_graph6,
    to_graph6,
)
from starfactor.solver import OracleVerdict, omega_oracle

from conftest import relabel


@st.composite
def graphs(draw, max_n=8, max_m=None):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    cap = len(pairs) if max_m is None else min(max_m, len(pairs))
    chosen = draw(
        st.lists(st.sampled_from(pairs), max_size=cap, unique=True)
        if pairs
        else st.just([])
    )
    return Graph(n, tuple(sorted(chosen)))


@st.composite
def permutations_of(draw, n):
    perm = list(range(n))
    rng = random.Random(draw(st.integers(min_value=0, max_value=2**32)))
    rng.shuffle(perm)
    return perm


@st.composite
def graph_with_permutation(draw, max_n=7):
    g = draw(graphs(max_n=max_n))
    perm = draw(permutations_of(g.n))
    return g, perm


class TestGraphProperties:
    @given(graphs(max_n=12))
    @settings(max_examples=300, deadline=None)
    def test_graph6_round_trip(self, g):
        assert parse_graph6(to_graph6(g)) == g

    @given(graph_with_permutation(max_n=8))
    @settings(max_examples=150, deadline=None)
    def test_girth_relabeling_invariant(self, gp):
        g, perm = gp
        assert girth(relabel(g, perm)) == girth(g)

    @given(graphs(max_n=10))
    @settings(max_examples=150, deadline=None)
    def test_forest_iff_infinite_girth(self, g):
        comps = connected_components(g)
        is_forest = g.m == g.n - len(comps)
        assert girth(g).is_infinite == is_forest

    @given(graphs(max_n=10))
    @settings(max_examples=150, deadline=None)
    def test_stems_are_exactly_leaf_neighbors(self, g):
        vc = classify_vertices(g)
        expected = {u for leaf in vc.leaves for u in g.adjacency[leaf]}
        assert vc.stems == expected

    @given(graphs(max_n=8))
    @settings(max_examples=100, deadline=None)
    def test_deleting_an_edge_never_shrinks_girth(self, g):
        if g.m == 0:
            return
        h = delete_edges(g, [0])
        assert girth(h) >= (girth(g).value or 3)


class TestFactorProperties:
    @given(graph_with_permutation(max_n=6))
    @settings(max_examples=100, deadline=None)
    def test_factor_count_relabeling_invariant(self, gp):
        g, perm = gp
        h = relabel(g, perm)

        def count(graph):
            try:
                return len(enumerate_star_factors(graph))
            except VacuousGraph:
                return None

        assert count(g) == count(h)

    @given(graph_with_permutation(max_n=6))
    @settings(max_examples=100, deadline=None)
    def test_spectrum_relabeling_invariant(self, gp):
        g, perm = gp
        h = relabel(g, perm)
        try:
            sa = edge_count_spectrum(enumerate_star_factors(g))
        except VacuousGraph:
            return
        sb = edge_count_spectrum(enumerate_star_factors(h))
        assert sa == sb


class TestVerdictProperties:
    @given(graph_with_permutation(max_n=6))
    @settings(max_examples=60, deadline=None)
    def test_oracle_verdict_relabeling_invariant(self, gp):
        g, perm = gp
        assert omega_oracle(g).verdict == omega_oracle(relabel(g, perm)).verdict

    @given(graphs(max_n=6))
    @settings(max_examples=60, deadline=None)
    def test_uniform_edge_counts_imply_membership(self, g):
        # constant weights witness membership whenever all factors have
        # the same number of edges
        try:
            factors = enumerate_star_factors(g)
        except VacuousGraph:
            return
        if len(edge_count_spectrum(factors)) == 1:
            assert omega_oracle(g).verdict is OracleVerdict.MEMBER

    @given(graphs(max_n=6))
    @settings(max_examples=60, deadline=None)
    def test_classifier_agrees_with_oracle(self, g):
        oracle = omega_oracle(g).verdict
        cls = classify(g).verdict
        mapping = {
            OracleVerdict.MEMBER: Verdict.MEMBER,
            OracleVerdict.NOT_MEMBER: Verdict.NOT_MEMBER,
            OracleVerdict.VACUOUS: Verdict.VACUOUS,
        }
        assert cls is mapping[oracle]
