import logging
import random
from collections import defaultdict
from collections.abc import Sequence
from dataclasses import replace
from fractions import Fraction

from classes.document.graph_document import GraphDocument
from classes.errors import BudgetExceededError
from classes.graph.fuzzy_graph import GraphValidator, IVFuzzyGraph
from classes.graph.operations import GraphOperator
from classes.morphism.finder import MorphismFinder
from classes.morphism.kind import MorphismKind
from classes.oracle.checks import (
    ClosureCheck, ComplementIsomorphismCheck, CompositionCompleteCheck,
    HalvedSumIdentityCheck, IsomorphismEquivalenceCheck, JoinDecompositionCheck,
    LiteralSumIdentityCheck, MutualWeakOrderCheck, PropertyCheck, ReflexivityCheck,
    SaturatedSelfComplementCheck, UnionDecompositionCheck
)
from classes.oracle.generator import GraphGenerator
from classes.oracle.params import GenParams
from classes.oracle.report import Failure, OracleReport, Verdict
from constants import (
    CONSTANT_PATH_PATH, DEFAULT_NODE_BUDGET, DEFAULT_ORACLE_BUDGET,
    DEFAULT_SEPARATOR, SUM_IDENTITY_WITNESS_PATH
)

logger = logging.getLogger(__name__)


class Oracle:
    """
    小さな事例での性質の掃引

    各試行はマスターシードと試行番号から導いたシードで生成するので、
    結果は試行の実行順序に依存しない

    Attributes
    ----------
    _finder : MorphismFinder
        写像の探索機
    _operator : GraphOperator
        入力と結果を検証しない演算機
    _checks : dict[str, PropertyCheck]
        名前から確認への対応、失敗の再実行に使う
    """

    _complete_max_vertices: int = 4
    _complement_max_vertices: int = 5
    _order_caveat: str = 'bounded search: 列挙した範囲での結果であり証明ではありません'
    _order_kinds: tuple[MorphismKind, ...] = (
        MorphismKind.WEAK_ISOMORPHISM, MorphismKind.WEAK_CO_ISOMORPHISM
    )

    def __init__(
            self,
            node_budget: int = DEFAULT_NODE_BUDGET,
            separator: str = DEFAULT_SEPARATOR
    ):
        """
        コンストラクタ

        Parameters
        ----------
        node_budget : int, optional
            写像の探索の予算, by default DEFAULT_NODE_BUDGET
        separator : str, optional
            組頂点IDの区切り文字, by default DEFAULT_SEPARATOR
        """
        self._finder = MorphismFinder(node_budget)
        self._operator = GraphOperator(separator, strict=False)

        checks: list[PropertyCheck] = [
            ClosureCheck(self._operator),
            UnionDecompositionCheck(self._operator),
            JoinDecompositionCheck(self._operator),
            IsomorphismEquivalenceCheck(self._finder),
            CompositionCompleteCheck(self._operator),
            SaturatedSelfComplementCheck(),
            ComplementIsomorphismCheck(self._finder),
            LiteralSumIdentityCheck(),
            HalvedSumIdentityCheck(self._finder),
        ]

        for kind in self._order_kinds:
            checks.append(ReflexivityCheck(self._finder, kind))
            checks.append(MutualWeakOrderCheck(self._finder, kind))

        self._checks = {check.name: check for check in checks}

    def check(self, name: str) -> PropertyCheck:
        return self._checks[name]

    def sweep_closure(
            self,
            params: GenParams,
            trials: int,
            check: ClosureCheck | None = None
    ) -> OracleReport:
        """
        四つの演算の閉包性の掃引

        Parameters
        ----------
        params : GenParams
            生成条件、頂点数は各試行の最大値
        trials : int
            試行の数
        check : ClosureCheck | None, optional
            既定の確認の代わりに使う確認, by default None

        Returns
        -------
        OracleReport
            結果、試行が0件ならInconclusive
        """
        check = check or self._checks[ClosureCheck._name]
        report = OracleReport('closure')

        for trial in range(trials):
            seed, rng = self._trial_rng(params, trial)
            g1 = GraphGenerator.draw(rng, rng.randint(0, params.vertex_count), params)
            g2 = GraphGenerator.draw(rng, rng.randint(0, params.vertex_count), params)

            self._run(report, check, (g1, g2), seed)

        self._log(report)

        return report

    def sweep_decomposition(self, params: GenParams, trials: int) -> list[OracleReport]:
        """
        和と結合の分解の掃引

        半分の試行ではどちらかの入力に辺の上界違反を注入する

        Parameters
        ----------
        params : GenParams
            生成条件、頂点数は各試行の最大値
        trials : int
            試行の数

        Returns
        -------
        list[OracleReport]
            和と結合の結果
        """
        checks = [
            self._checks[UnionDecompositionCheck._name],
            self._checks[JoinDecompositionCheck._name],
        ]
        reports = [OracleReport(check.name) for check in checks]
        upper = max(1, params.vertex_count)
        injected = 0

        for trial in range(trials):
            seed, rng = self._trial_rng(params, trial)
            graphs = [
                GraphGenerator.draw(rng, rng.randint(1, upper), params, prefix)
                for prefix in ('v', 'w')
            ]
            target = rng.randrange(4)

            if target < 2 and len(graphs[target]) >= 2:
                graphs[target] = GraphGenerator.inject_violation(
                    graphs[target], rng, params.membership_grid
                )
                injected += 1

            for check, report in zip(checks, reports):
                self._run(report, check, tuple(graphs), seed)

        logger.debug('違反を注入した試行: %d', injected)

        for report in reports:
            self._log(report)

        return reports

    def sweep_equivalence(self, params: GenParams, trials: int) -> OracleReport:
        """
        同型が同値関係であることの掃引

        Parameters
        ----------
        params : GenParams
            生成条件、頂点数は各試行の最大値
        trials : int
            試行の数

        Returns
        -------
        OracleReport
            結果
        """
        check = self._checks[IsomorphismEquivalenceCheck._name]
        report = OracleReport(check.name)
        upper = max(1, params.vertex_count)

        for trial in range(trials):
            seed, rng = self._trial_rng(params, trial)
            g1 = GraphGenerator.draw(rng, rng.randint(1, upper), params)
            g2 = self._shuffle(g1, rng)
            g3 = self._shuffle(g2, rng)

            self._run(report, check, (g1, g2, g3), seed)

        self._log(report)

        return report

    def explore_weak_iso_order(
            self,
            max_vertices: int,
            grid: int,
            budget: int = DEFAULT_ORACLE_BUDGET,
            kind: MorphismKind = MorphismKind.WEAK_ISOMORPHISM
    ) -> OracleReport:
        """
        弱同型が半順序になるかの探索

        頂点数1からmax_verticesまでの刻みgのグラフを全て列挙し、
        写像が存在し得る組だけを比べる

        Parameters
        ----------
        max_vertices : int
            頂点数の最大値
        grid : int
            所属度の刻み
        budget : int, optional
            列挙するグラフの数の上限, by default DEFAULT_ORACLE_BUDGET
        kind : MorphismKind, optional
            弱同型または弱余同型, by default MorphismKind.WEAK_ISOMORPHISM

        Returns
        -------
        OracleReport
            結果、反例があれば両方向の写像を持つが同型でない組

        Raises
        ------
        ValueError
            kindが弱同型でも弱余同型でもない場合
        BudgetExceededError
            列挙するグラフの数が予算を超える場合、予算が0の場合は常に
        """
        if kind not in self._order_kinds:
            raise ValueError(f'弱同型か弱余同型を指定してください: {kind.value}')

        if budget < 1:
            raise BudgetExceededError(f'予算は1以上にしてください: {budget}')

        total = 0

        for n in range(1, max_vertices + 1):
            total += GraphGenerator.count_instances(n, grid)

            if total > budget:
                raise BudgetExceededError(
                    f'頂点数{n}までで列挙するグラフ{total}個が予算{budget}を超えます'
                )

        logger.info('%s: %d個のグラフを列挙します', kind.value, total)

        reflexivity = self._checks[f'{ReflexivityCheck._name}[{kind.value}]']
        mutual = self._checks[f'{MutualWeakOrderCheck._name}[{kind.value}]']
        report = OracleReport(f'order-problem[{kind.value}]', caveat=self._order_caveat)

        for n in range(1, max_vertices + 1):
            buckets: dict[tuple, list[IVFuzzyGraph]] = defaultdict(list)

            for graph in GraphGenerator.enumerate(n, grid):
                buckets[self._order_bucket(graph, kind)].append(graph)

            for bucket in buckets.values():
                for i, g1 in enumerate(bucket):
                    self._run(report, reflexivity, (g1,), None)

                    for g2 in bucket[i + 1:]:
                        self._run(report, mutual, (g1, g2), None)

        self._log(report)

        return report

    def sweep_complete_props(self, params: GenParams, trials: int) -> list[OracleReport]:
        """
        完全グラフの性質の掃引

        自身との合成の完全性、飽和したグラフの自己補対性、補グラフの同型、
        二つの総和の比較を確かめる
        総和の一致は補グラフの補グラフが元に戻るだけでは成り立たず、
        同梱の道のグラフが反例になることが期待される

        Parameters
        ----------
        params : GenParams
            生成条件、頂点数は各試行の最大値
        trials : int
            試行の数

        Returns
        -------
        list[OracleReport]
            性質ごとの結果
        """
        composition = self._checks[CompositionCompleteCheck._name]
        saturated = self._checks[SaturatedSelfComplementCheck._name]
        complement = self._checks[ComplementIsomorphismCheck._name]
        literal = self._checks[LiteralSumIdentityCheck._name]
        halved = self._checks[HalvedSumIdentityCheck._name]

        reports = {
            check.name: OracleReport(check.name)
            for check in (composition, saturated, complement, halved)
        }
        reports[literal.name] = OracleReport(
            literal.name, expected_verdict=Verdict.COUNTEREXAMPLE_FOUND
        )

        witness = GraphValidator.validate(GraphDocument.load(SUM_IDENTITY_WITNESS_PATH))
        constant_path = GraphValidator.validate(GraphDocument.load(CONSTANT_PATH_PATH))

        for graph in (witness, constant_path):
            self._run(reports[literal.name], literal, (graph,), None)

        self._run(reports[halved.name], halved, (constant_path,), None)

        complete = replace(params, complete_only=True)
        saturating = replace(params, complete_only=True, edge_probability=Fraction(1))

        for trial in range(trials):
            seed, rng = self._trial_rng(params, trial)

            small = self._upper(params, self._complete_max_vertices)
            graph = GraphGenerator.draw(rng, rng.randint(1, small), complete)
            self._run(reports[composition.name], composition, (graph,), seed)
            self._run(reports[halved.name], halved, (graph,), seed)

            full = GraphGenerator.draw(rng, rng.randint(1, small), saturating)
            self._run(reports[saturated.name], saturated, (full,), seed)

            n = rng.randint(1, self._upper(params, self._complement_max_vertices))
            g1 = GraphGenerator.draw(rng, n, complete)

            if rng.randrange(2) == 0:
                g2 = self._shuffle(g1, rng)

            else:
                g2 = GraphGenerator.draw(rng, n, complete)

            self._run(reports[complement.name], complement, (g1, g2), seed)

        for failure in reports[literal.name].failures:
            logger.warning('総和が一致しません(既知の反例): %s', failure.detail)

        for report in reports.values():
            self._log(report)

        return list(reports.values())

    def replay(self, failure: Failure, check: PropertyCheck | None = None) -> str | None:
        """
        記録された失敗の再実行

        Parameters
        ----------
        failure : Failure
            失敗の記録
        check : PropertyCheck | None, optional
            記録された名前の確認の代わりに使う確認, by default None

        Returns
        -------
        str | None
            再実行での失敗の内容、再現しなければNone
        """
        check = check or self._checks[failure.check]
        graphs = [GraphValidator.build(document) for document in failure.documents]

        return check.failure(graphs)

    @staticmethod
    def _run(
            report: OracleReport,
            check: PropertyCheck,
            graphs: Sequence[IVFuzzyGraph],
            seed: int | None
    ) -> None:
        if not check.applies(graphs):
            return

        report.instances_checked += 1
        detail = check.failure(graphs)

        if detail is None:
            return

        logger.debug('%s: 反例 seed=%s %s', check.name, seed, detail)

        report.failures.append(Failure(
            check.name,
            seed,
            tuple(graph.to_document() for graph in graphs),
            detail
        ))

    @staticmethod
    def _trial_rng(params: GenParams, trial: int) -> tuple[int, random.Random]:
        seed = GraphGenerator.derive_seed(params.seed, trial)
        logger.debug('試行%d: seed=%d', trial, seed)

        return seed, random.Random(seed)

    @staticmethod
    def _upper(params: GenParams, cap: int) -> int:
        return max(1, min(params.vertex_count, cap))

    @staticmethod
    def _shuffle(graph: IVFuzzyGraph, rng: random.Random) -> IVFuzzyGraph:
        """
        頂点IDの並べ替えによる付け替え

        Parameters
        ----------
        graph : IVFuzzyGraph
            グラフ
        rng : random.Random
            乱数生成器

        Returns
        -------
        IVFuzzyGraph
            元のグラフと同型なグラフ
        """
        vertices = graph.vertices
        shuffled = list(vertices)
        rng.shuffle(shuffled)

        return graph.relabel(dict(zip(vertices, shuffled)))

    @staticmethod
    def _order_bucket(graph: IVFuzzyGraph, kind: MorphismKind) -> tuple:
        """
        写像が存在し得るグラフの組を集める鍵

        弱同型は頂点の所属度の多重集合、弱余同型は正の辺の所属度の多重集合を保つ

        Returns
        -------
        tuple
            並べた所属度
        """
        if kind is MorphismKind.WEAK_ISOMORPHISM:
            values = (mu for _, mu in graph.vertex_mu.items())

        else:
            values = (mu for _, mu in graph.edge_mu.items() if not mu.is_zero())

        return tuple(sorted(mu.sort_key() for mu in values))

    @staticmethod
    def _log(report: OracleReport) -> None:
        logger.info(report.summary())
