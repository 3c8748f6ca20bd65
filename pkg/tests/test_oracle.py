import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from classes.errors import BudgetExceededError, WitnessVerificationError
from classes.graph.complete import CompleteGraphAnalyzer
from classes.graph.fuzzy_graph import GraphValidator, IVFuzzyGraph
from classes.graph.operations import GraphOperator
from classes.interval import ONE, ZERO, Interval
from classes.morphism.checker import MorphismChecker
from classes.morphism.finder import MorphismFinder
from classes.morphism.kind import MorphismKind
from classes.morphism.mapping import VertexMapping
from classes.oracle.checks import ClosureCheck, MutualWeakOrderCheck, PropertyCheck
from classes.oracle.generator import GraphGenerator
from classes.oracle.oracle import Oracle
from classes.oracle.params import GenParams
from classes.oracle.report import OracleReport, Verdict


def _broken_union(g1: IVFuzzyGraph, g2: IVFuzzyGraph) -> IVFuzzyGraph:
    return IVFuzzyGraph({'a': ZERO, 'b': ONE}, {('a', 'b'): ONE})


class _FixedFinder(MorphismFinder):
    def __init__(self, mapping: VertexMapping):
        super().__init__()

        self._mapping = mapping

    def find(self, g1, g2, kind):
        return self._mapping


@pytest.fixture
def oracle() -> Oracle:
    return Oracle()


@pytest.fixture
def broken_closure() -> ClosureCheck:
    return ClosureCheck(GraphOperator(strict=False), operations={'union': _broken_union})


class TestGenParams:
    def test_defaults(self):
        params = GenParams()

        assert params.vertex_count == 4
        assert params.edge_probability == Fraction(1, 2)
        assert params.membership_grid == 10

    def test_probability_is_converted(self):
        assert GenParams(edge_probability='1/3').edge_probability == Fraction(1, 3)

    @pytest.mark.parametrize('field, value', [
        ('vertex_count', -1),
        ('edge_probability', Fraction(3, 2)),
        ('membership_grid', 0),
        ('seed', 2 ** 64),
    ])
    def test_rejects(self, field, value):
        with pytest.raises(ValueError):
            GenParams(**{field: value})


class TestGenerator:
    @given(
        st.integers(0, 2 ** 32),
        st.integers(0, 5),
        st.fractions(0, 1, max_denominator=4),
        st.integers(1, 10),
        st.booleans()
    )
    def test_drawn_graphs_are_valid(self, seed, n, probability, grid, complete_only):
        params = GenParams(n, probability, grid, complete_only, seed)
        graph = GraphGenerator.generate(params)

        assert len(graph) == n
        assert graph.is_valid
        assert all(not mu.is_zero() for _, mu in graph.edge_mu.items())
        assert all((mu.lo * grid).denominator == 1 for _, mu in graph.vertex_mu.items())

        if complete_only:
            assert CompleteGraphAnalyzer.is_complete(graph)

    def test_deterministic(self):
        params = GenParams(seed=42)

        assert GraphGenerator.generate(params) == GraphGenerator.generate(params)
        assert GraphGenerator.derive_seed(7, 3) == GraphGenerator.derive_seed(7, 3)
        assert GraphGenerator.derive_seed(7, 3) != GraphGenerator.derive_seed(7, 4)

    def test_prefix(self):
        graph = GraphGenerator.generate(GenParams(vertex_count=2), prefix='w')

        assert graph.vertices == ['w0', 'w1']

    @pytest.mark.parametrize('n, g, expected', [(0, 3, 1), (1, 1, 3), (2, 1, 14), (1, 4, 15)])
    def test_count_instances(self, n, g, expected):
        assert GraphGenerator.count_instances(n, g) == expected

    @pytest.mark.parametrize('n', [0, 1, 2])
    @pytest.mark.parametrize('g', [1, 2, 3, 4])
    def test_enumerate_matches_count(self, n, g):
        graphs = list(GraphGenerator.enumerate(n, g))

        assert len(graphs) == GraphGenerator.count_instances(n, g)
        assert all(graph.is_valid for graph in graphs)

    def test_enumerated_graphs_are_distinct(self):
        documents = {graph.to_document().to_text() for graph in GraphGenerator.enumerate(2, 2)}

        assert len(documents) == GraphGenerator.count_instances(2, 2)

    def test_edge_options(self):
        assert len(GraphGenerator.edge_options(ONE, 2)) == 6
        assert GraphGenerator.edge_options(ZERO, 2) == [ZERO]

    def test_inject_violation(self):
        graph = GraphGenerator.generate(GenParams(vertex_count=3, seed=1))
        broken = GraphGenerator.inject_violation(graph, random.Random(0), 10)

        assert graph.is_valid
        assert not broken.is_valid


class TestReport:
    def test_empty_report_is_inconclusive(self):
        report = OracleReport('closure')

        assert report.verdict is Verdict.INCONCLUSIVE
        assert not report.as_expected
        assert '期待: AllPassed' in report.summary()

    def test_to_dict(self):
        report = OracleReport('closure', instances_checked=3, caveat='bounded search')

        assert report.to_dict() == {
            'property_name': 'closure',
            'instances_checked': 3,
            'verdict': 'AllPassed',
            'expected_verdict': 'AllPassed',
            'caveat': 'bounded search',
            'failures': [],
        }


class TestChecks:
    def test_name_must_be_declared(self):
        class Unnamed(PropertyCheck):
            def failure(self, graphs):
                return None

        with pytest.raises(TypeError):
            Unnamed()

    def test_lookup(self, oracle):
        assert oracle.check('closure').name == 'closure'
        assert oracle.check('reflexivity[weak-iso]').name == 'reflexivity[weak-iso]'

    def test_unverified_witness_is_rejected(self):
        g1 = IVFuzzyGraph({'a': Interval.point('0.2')})
        g2 = IVFuzzyGraph({'a': Interval.point('0.5')})
        check = MutualWeakOrderCheck(
            _FixedFinder(VertexMapping({'a': 'a'})), MorphismKind.WEAK_ISOMORPHISM
        )

        with pytest.raises(WitnessVerificationError):
            check.failure((g1, g2))


class TestSweeps:
    def test_closure(self, oracle):
        report = oracle.sweep_closure(GenParams(seed=0), 500)

        assert report.verdict is Verdict.ALL_PASSED
        assert report.instances_checked == 500

    def test_closure_without_trials(self, oracle):
        assert oracle.sweep_closure(GenParams(), 0).verdict is Verdict.INCONCLUSIVE

    def test_broken_operation_is_caught(self, oracle, broken_closure):
        report = oracle.sweep_closure(GenParams(seed=3), 20, check=broken_closure)

        assert report.verdict is Verdict.COUNTEREXAMPLE_FOUND
        assert len(report.failures) == 20
        assert report.failures[0].detail.startswith('union:')

    def test_failures_are_reproducible(self, oracle, broken_closure):
        first = oracle.sweep_closure(GenParams(seed=9), 5, check=broken_closure)
        second = oracle.sweep_closure(GenParams(seed=9), 5, check=broken_closure)

        assert [failure.seed for failure in first.failures] == [
            failure.seed for failure in second.failures
        ]
        assert first.failures[0].documents == second.failures[0].documents

    def test_replay(self, oracle, broken_closure):
        report = oracle.sweep_closure(GenParams(seed=1), 3, check=broken_closure)
        failure = report.failures[0]

        assert oracle.replay(failure, check=broken_closure) is not None
        assert oracle.replay(failure) is None

    def test_decomposition(self, oracle):
        reports = oracle.sweep_decomposition(GenParams(seed=0), 200)

        assert [report.property_name for report in reports] == [
            'union-decomposition', 'join-decomposition'
        ]
        assert all(report.verdict is Verdict.ALL_PASSED for report in reports)
        assert all(report.instances_checked == 200 for report in reports)

    def test_equivalence(self, oracle):
        report = oracle.sweep_equivalence(GenParams(seed=0), 100)

        assert report.verdict is Verdict.ALL_PASSED

    @pytest.mark.parametrize('kind, grid', [
        (MorphismKind.WEAK_ISOMORPHISM, 4),
        (MorphismKind.WEAK_CO_ISOMORPHISM, 2),
    ])
    def test_order_problem(self, oracle, kind, grid):
        report = oracle.explore_weak_iso_order(2, grid, kind=kind)

        assert report.verdict is Verdict.ALL_PASSED
        assert report.caveat.startswith('bounded search')
        assert report.property_name == f'order-problem[{kind.value}]'

    @pytest.mark.parametrize('kind', [
        MorphismKind.WEAK_ISOMORPHISM, MorphismKind.WEAK_CO_ISOMORPHISM
    ])
    def test_order_problem_witnesses_verify(self, oracle, kind):
        report = oracle.explore_weak_iso_order(2, 2, kind=kind)
        finder = MorphismFinder()

        assert report.instances_checked > 0

        for failure in report.failures:
            g1, g2 = (GraphValidator.validate(document) for document in failure.documents)

            for source, target in ((g1, g2), (g2, g1)):
                mapping = finder.find(source, target, kind)

                assert mapping is not None
                assert MorphismChecker.check(source, target, mapping, kind)

    def test_order_problem_budget(self, oracle):
        with pytest.raises(BudgetExceededError):
            oracle.explore_weak_iso_order(2, 4, budget=0)

        with pytest.raises(BudgetExceededError):
            oracle.explore_weak_iso_order(2, 4, budget=GraphGenerator.count_instances(1, 4))

    def test_order_problem_kind(self, oracle):
        with pytest.raises(ValueError):
            oracle.explore_weak_iso_order(1, 1, kind=MorphismKind.ISOMORPHISM)

    @settings(max_examples=20, deadline=None)
    @given(st.integers(0, 1000))
    def test_complete_properties(self, seed):
        reports = {
            report.property_name: report
            for report in Oracle().sweep_complete_props(GenParams(seed=seed), 5)
        }

        assert all(report.as_expected for report in reports.values())

    def test_complete_properties_sweep(self, oracle):
        reports = {
            report.property_name: report
            for report in oracle.sweep_complete_props(GenParams(seed=0), 100)
        }

        literal = reports['literal-sum-identity']
        assert literal.verdict is Verdict.COUNTEREXAMPLE_FOUND
        assert literal.as_expected
        assert literal.instances_checked == 2

        for name in (
            'composition-complete',
            'saturated-self-complementary',
            'complement-isomorphism',
            'halved-sum-identity',
        ):
            assert reports[name].verdict is Verdict.ALL_PASSED

        assert reports['saturated-self-complementary'].instances_checked == 100
        assert reports['halved-sum-identity'].instances_checked >= 1
