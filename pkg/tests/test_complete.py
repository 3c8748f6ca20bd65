import logging
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from classes.errors import HypothesisNotMetError, NotCompleteError
from classes.graph.complete import CompleteGraphAnalyzer
from classes.graph.crisp import CrispConstructions
from classes.graph.fuzzy_graph import IVFuzzyGraph
from classes.interval import Interval, ZERO
from strategies import graphs, interval


@st.composite
def complete_graphs(draw, max_vertices: int = 4) -> IVFuzzyGraph:
    """
    [0, 0]の辺を持たない完全グラフ
    """
    graph = draw(graphs(max_vertices=max_vertices))
    edges = {}

    for u, v in graph.pairs():
        bound = graph.endpoint_bound(u, v)

        if not bound.is_zero() and draw(st.booleans()):
            edges[(u, v)] = bound

    return IVFuzzyGraph(graph.vertex_mu, edges)


class TestCompleteness:
    def test_complete_triangle(self, complete_triangle, triangle):
        assert CompleteGraphAnalyzer.is_complete(complete_triangle)
        assert not CompleteGraphAnalyzer.is_complete(triangle)

    def test_missing_edges_do_not_matter(self, path_abc):
        assert CompleteGraphAnalyzer.is_complete(path_abc)
        assert not CompleteGraphAnalyzer.is_saturated(path_abc)

    def test_empty_graph(self):
        assert CompleteGraphAnalyzer.is_complete(IVFuzzyGraph.empty())

    def test_complement_needs_completeness(self, triangle):
        with pytest.raises(NotCompleteError):
            CompleteGraphAnalyzer.complement(triangle)


class TestComplement:
    def test_path(self, path_abc):
        complement = CompleteGraphAnalyzer.complement(path_abc)

        assert complement.edges == [('a', 'c')]
        assert complement.edge_membership('a', 'c') == interval('0.1', '0.3')
        assert complement.vertex_mu == path_abc.vertex_mu

    def test_saturated_graph_has_no_complement_edges(self, complete_triangle):
        assert CompleteGraphAnalyzer.complement(complete_triangle).edges == []

    def test_mixed_pair_is_reported(self, caplog):
        graph = IVFuzzyGraph(
            {'a': interval('0', '0.5'), 'b': interval('0.2', '0.4')},
            {('a', 'b'): interval('0', '0.4')}
        )

        with caplog.at_level(logging.WARNING):
            complement = CompleteGraphAnalyzer.complement(graph)

        assert CompleteGraphAnalyzer.mixed_pairs(graph) == [('a', 'b')]
        assert 'a-b' in caplog.text
        assert complement.edges == []

    @given(complete_graphs())
    def test_involution(self, graph):
        complement = CompleteGraphAnalyzer.complement(graph)

        assert CompleteGraphAnalyzer.is_complete(complement)
        assert CompleteGraphAnalyzer.complement(complement) == graph

    @given(complete_graphs())
    def test_positive_edges_match_the_crisp_complement(self, graph):
        assume(all(mu.hi > 0 for _, mu in graph.vertex_mu.items()))

        complement = CompleteGraphAnalyzer.complement(graph)

        assert CrispConstructions.same(
            complement.crisp_skeleton(positive_only=True),
            CrispConstructions.complement(graph.crisp_skeleton())
        )


class TestSelfComplementary:
    def test_path_is_self_complementary(self, path_abc):
        assert CompleteGraphAnalyzer.is_self_complementary(path_abc)

    def test_explicit_zero_edge_is_lost(self):
        graph = IVFuzzyGraph(
            {'a': ZERO, 'b': interval('0.2', '0.4')}, {('a', 'b'): ZERO}
        )

        assert CompleteGraphAnalyzer.is_complete(graph)
        assert not CompleteGraphAnalyzer.is_self_complementary(graph)

    @given(complete_graphs())
    def test_every_complete_graph_is_self_complementary(self, graph):
        assert CompleteGraphAnalyzer.is_self_complementary(graph)

    def test_strong_self_complement(self, constant_path4, path_abc):
        assert CompleteGraphAnalyzer.is_strongly_self_complementary(constant_path4)
        assert not CompleteGraphAnalyzer.is_strongly_self_complementary(path_abc)

    def test_saturated(self, complete_triangle):
        assert CompleteGraphAnalyzer.is_saturated(complete_triangle)
        assert CompleteGraphAnalyzer.check_saturated_self_complementary(complete_triangle)

    def test_saturated_hypothesis_not_met(self, path_abc, triangle):
        for graph in (path_abc, triangle):
            with pytest.raises(HypothesisNotMetError):
                CompleteGraphAnalyzer.check_saturated_self_complementary(graph)


class TestSumIdentity:
    def test_path(self, path_abc):
        report = CompleteGraphAnalyzer.sum_identity(path_abc)

        assert (report.lhs_lo, report.lhs_hi) == (Fraction(3, 10), Fraction(7, 10))
        assert (report.rhs_lo, report.rhs_hi) == (Fraction(2, 5), Fraction(1))
        assert not report.literal_holds
        assert not report.halved_holds

    def test_constant_path(self, constant_path4):
        report = CompleteGraphAnalyzer.sum_identity(constant_path4)

        assert report.to_dict() == {
            'lhs_lo': '0.9',
            'lhs_hi': '1.5',
            'rhs_lo': '1.8',
            'rhs_hi': '3',
            'literal_holds': False,
            'halved_holds': True,
        }

    def test_single_vertex(self):
        report = CompleteGraphAnalyzer.sum_identity(IVFuzzyGraph({'a': Interval.point(1)}))

        assert report.literal_holds
        assert report.halved_holds

    @given(complete_graphs())
    def test_halved_identity_on_strong_self_complements(self, graph):
        if CompleteGraphAnalyzer.is_strongly_self_complementary(graph):
            assert CompleteGraphAnalyzer.sum_identity(graph).halved_holds
