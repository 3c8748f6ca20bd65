from itertools import permutations, product

import pytest
from hypothesis import given, settings

from classes.errors import (
    BudgetExceededError, MappingParseError, NotBijectiveError, PartialMappingError
)
from classes.graph.fuzzy_graph import IVFuzzyGraph
from classes.interval import Interval
from classes.morphism.checker import MorphismChecker
from classes.morphism.finder import MorphismFinder
from classes.morphism.kind import MorphismKind
from classes.morphism.mapping import VertexMapping
from constants import DATA_DIR
from strategies import graphs


def _exists(g1: IVFuzzyGraph, g2: IVFuzzyGraph, kind: MorphismKind) -> bool:
    if kind.bijective:
        if len(g1) != len(g2):
            return False

        images = permutations(g2.vertices)

    else:
        images = product(g2.vertices, repeat=len(g1))

    return any(
        MorphismChecker.check(g1, g2, VertexMapping(zip(g1.vertices, image)), kind)
        for image in images
    )


class TestMapping:
    def test_parse_file(self):
        mapping = VertexMapping.parse((DATA_DIR / 'swap.map').read_text(encoding='utf-8'))

        assert dict(mapping) == {'a1': 'b2', 'b1': 'a2'}
        assert mapping.to_text() == 'a1 -> b2\nb1 -> a2\n'

    @pytest.mark.parametrize('text', ['a1 b2', 'a1 -> ', 'a -> b -> c', 'a -> b\na -> c'])
    def test_parse_errors(self, text):
        with pytest.raises(MappingParseError):
            VertexMapping.parse(text)

    def test_inverse_and_then(self):
        mapping = VertexMapping({'a': 'x', 'b': 'y'})

        assert dict(mapping.inverse()) == {'x': 'a', 'y': 'b'}
        assert dict(mapping.then(mapping.inverse())) == {'a': 'a', 'b': 'b'}

    def test_inverse_needs_injective(self):
        with pytest.raises(ValueError):
            VertexMapping({'a': 'x', 'b': 'x'}).inverse()


class TestChecker:
    def test_weak_isomorphism(self, load):
        g1, g2 = load('weak_iso_left'), load('weak_iso_right')
        f = VertexMapping({'a1': 'b2', 'b1': 'a2'})

        assert MorphismChecker.check(g1, g2, f, MorphismKind.WEAK_ISOMORPHISM)
        assert MorphismChecker.check(g1, g2, f, MorphismKind.HOMOMORPHISM)
        assert not MorphismChecker.check(g1, g2, f, MorphismKind.ISOMORPHISM)
        assert not MorphismChecker.check(g1, g2, f, MorphismKind.WEAK_CO_ISOMORPHISM)

    def test_weak_co_isomorphism(self, load):
        g1, g2 = load('weak_co_iso_left'), load('weak_co_iso_right')
        f = VertexMapping({'a1': 'a2', 'b1': 'b2'})

        assert MorphismChecker.check(g1, g2, f, MorphismKind.WEAK_CO_ISOMORPHISM)
        assert not MorphismChecker.check(g1, g2, f, MorphismKind.WEAK_ISOMORPHISM)

    def test_weak_co_isomorphism_with_crossed_mapping(self, load):
        g1, g2 = load('weak_co_iso_left'), load('weak_co_iso_right')
        f = VertexMapping({'a1': 'b2', 'b1': 'a2'})

        assert MorphismChecker.check(g1, g2, f, MorphismKind.HOMOMORPHISM)
        assert not MorphismChecker.check(g1, g2, f, MorphismKind.WEAK_ISOMORPHISM)
        assert MorphismChecker.check(g1, g2, f, MorphismKind.WEAK_CO_ISOMORPHISM)
        assert not MorphismChecker.check(g1, g2, f, MorphismKind.ISOMORPHISM)

    def test_failures_are_described(self, load):
        g1, g2 = load('weak_iso_left'), load('weak_iso_right')
        f = VertexMapping({'a1': 'b2', 'b1': 'a2'})

        failures = MorphismChecker.failures(g1, g2, f, MorphismKind.ISOMORPHISM)

        assert len(failures) == 2
        assert failures[0].startswith('辺 a1-b1')
        assert failures[1].startswith('辺 a2-b2')

    def test_partial_mapping(self, triangle):
        with pytest.raises(PartialMappingError):
            MorphismChecker.check(
                triangle, triangle, VertexMapping({'x': 'x'}), MorphismKind.HOMOMORPHISM
            )

    def test_not_bijective(self, complete_triangle):
        f = VertexMapping({'x': 'x', 'y': 'x', 'z': 'x'})

        with pytest.raises(NotBijectiveError):
            MorphismChecker.check(complete_triangle, complete_triangle, f, MorphismKind.ISOMORPHISM)

    def test_homomorphism_may_collapse_vertices(self):
        g1 = IVFuzzyGraph({'a': Interval.point('0.3'), 'b': Interval.point('0.3')})
        g2 = IVFuzzyGraph({'c': Interval.point('0.5')})
        f = VertexMapping({'a': 'c', 'b': 'c'})

        assert MorphismChecker.check(g1, g2, f, MorphismKind.HOMOMORPHISM)

    @given(graphs())
    def test_identity_is_every_kind(self, graph):
        identity = VertexMapping.identity(graph.vertices)

        for kind in MorphismKind:
            assert MorphismChecker.check(graph, graph, identity, kind)


class TestFinder:
    def test_finds_weak_isomorphism(self, load):
        g1, g2 = load('weak_iso_left'), load('weak_iso_right')

        found = MorphismFinder().find(g1, g2, MorphismKind.WEAK_ISOMORPHISM)

        assert dict(found) == {'a1': 'b2', 'b1': 'a2'}
        assert MorphismFinder().find(g1, g2, MorphismKind.ISOMORPHISM) is None

    def test_finds_weak_co_isomorphism(self, load):
        g1, g2 = load('weak_co_iso_left'), load('weak_co_iso_right')

        found = MorphismFinder().find(g1, g2, MorphismKind.WEAK_CO_ISOMORPHISM)

        assert dict(found) == {'a1': 'a2', 'b1': 'b2'}
        assert MorphismFinder().find(g1, g2, MorphismKind.WEAK_ISOMORPHISM) is None

    def test_size_mismatch(self, triangle):
        assert MorphismFinder().find(triangle, triangle.restrict(['x']), MorphismKind.ISOMORPHISM) is None

    def test_empty_graphs(self):
        empty = IVFuzzyGraph.empty()

        assert MorphismFinder().find(empty, empty, MorphismKind.ISOMORPHISM) == VertexMapping()

    def test_budget_exceeded(self, triangle):
        with pytest.raises(BudgetExceededError):
            MorphismFinder(node_budget=0).find(triangle, triangle, MorphismKind.ISOMORPHISM)

    def test_negative_budget(self):
        with pytest.raises(ValueError):
            MorphismFinder(node_budget=-1)

    def test_counts_nodes(self, constant_path4):
        finder = MorphismFinder()
        finder.find(constant_path4, constant_path4, MorphismKind.ISOMORPHISM)

        assert finder.nodes >= len(constant_path4)

    @given(graphs())
    def test_isomorphic_to_relabelled_copy(self, graph):
        names = {vertex: f'u{len(graph) - i}' for i, vertex in enumerate(graph.vertices)}
        copy = graph.relabel(names)

        found = MorphismFinder().find(graph, copy, MorphismKind.ISOMORPHISM)

        assert found is not None
        assert MorphismChecker.check(graph, copy, found, MorphismKind.ISOMORPHISM)

    @settings(max_examples=50)
    @given(graphs(max_vertices=4), graphs(max_vertices=4, prefix='w'))
    def test_agrees_with_brute_force(self, g1, g2):
        finder = MorphismFinder()

        for kind in MorphismKind:
            found = finder.find(g1, g2, kind)

            assert (found is not None) == _exists(g1, g2, kind)

            if found is not None:
                assert MorphismChecker.check(g1, g2, found, kind)

    @settings(max_examples=50)
    @given(graphs(max_vertices=4), graphs(max_vertices=4, prefix='w'))
    def test_pruning_does_not_change_the_result(self, g1, g2):
        for kind in MorphismKind:
            pruned = MorphismFinder(prune=True).find(g1, g2, kind)
            plain = MorphismFinder(prune=False).find(g1, g2, kind)

            assert pruned == plain
