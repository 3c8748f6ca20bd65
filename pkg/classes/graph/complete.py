import logging
from dataclasses import dataclass
from fractions import Fraction

from classes.errors import HypothesisNotMetError, NotCompleteError
from classes.graph.fuzzy_graph import Edge, IVFuzzyGraph
from classes.interval import Interval
from classes.morphism.finder import MorphismFinder
from classes.morphism.kind import MorphismKind

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SumIdentityReport:
    """
    辺の所属度の総和と端点の最小値の総和の比較

    総和は異なる頂点の非順序対全てについてとり、存在しない辺は0とする

    Attributes
    ----------
    lhs_lo : Fraction
        辺の所属度の下界の総和
    lhs_hi : Fraction
        辺の所属度の上界の総和
    rhs_lo : Fraction
        端点の所属度の下界の最小値の総和
    rhs_hi : Fraction
        端点の所属度の上界の最小値の総和
    """

    lhs_lo: Fraction
    lhs_hi: Fraction
    rhs_lo: Fraction
    rhs_hi: Fraction

    @property
    def literal_holds(self) -> bool:
        return self.lhs_lo == self.rhs_lo and self.lhs_hi == self.rhs_hi

    @property
    def halved_holds(self) -> bool:
        return 2 * self.lhs_lo == self.rhs_lo and 2 * self.lhs_hi == self.rhs_hi

    def to_dict(self) -> dict[str, str | bool]:
        return {
            'lhs_lo': Interval.format_bound(self.lhs_lo),
            'lhs_hi': Interval.format_bound(self.lhs_hi),
            'rhs_lo': Interval.format_bound(self.rhs_lo),
            'rhs_hi': Interval.format_bound(self.rhs_hi),
            'literal_holds': self.literal_holds,
            'halved_holds': self.halved_holds,
        }


class CompleteGraphAnalyzer:
    """
    完全グラフの解析

    完全性の判定、補グラフ、自己補対性、総和の比較を行う
    補グラフは完全グラフに対してだけ定義する
    """

    @staticmethod
    def is_complete(graph: IVFuzzyGraph) -> bool:
        """
        完全性の判定

        Parameters
        ----------
        graph : IVFuzzyGraph
            グラフ

        Returns
        -------
        bool
            全ての辺の所属度が端点の所属度のrminと一致する場合True
        """
        return all(
            mu == graph.endpoint_bound(u, v) for (u, v), mu in graph.edge_mu.items()
        )

    @staticmethod
    def ensure_complete(graph: IVFuzzyGraph) -> None:
        if not CompleteGraphAnalyzer.is_complete(graph):
            raise NotCompleteError('完全グラフではありません')

    @staticmethod
    def mixed_pairs(graph: IVFuzzyGraph) -> list[Edge]:
        """
        片方の境界だけが正の組

        Parameters
        ----------
        graph : IVFuzzyGraph
            グラフ

        Returns
        -------
        list[Edge]
            所属度の下界が0で上界が正の辺
        """
        return [
            edge for edge, mu in graph.edge_mu.items() if mu.lo == 0 < mu.hi
        ]

    @staticmethod
    def complement(graph: IVFuzzyGraph) -> IVFuzzyGraph:
        """
        補グラフ

        下界と上界それぞれについて、組の所属度が正なら0、0なら端点の最小値とする
        結果が[0, 0]の組は辺にしない

        Parameters
        ----------
        graph : IVFuzzyGraph
            完全グラフ

        Returns
        -------
        IVFuzzyGraph
            頂点と頂点の所属度が同じ補グラフ

        Raises
        ------
        NotCompleteError
            完全グラフでない場合
        """
        CompleteGraphAnalyzer.ensure_complete(graph)

        mixed = CompleteGraphAnalyzer.mixed_pairs(graph)

        if mixed:
            logger.warning(
                '片方の境界だけが正の組があります: %s',
                ', '.join(IVFuzzyGraph.edge_name(u, v) for u, v in mixed)
            )

        edges: dict[Edge, Interval] = {}

        for u, v in graph.pairs():
            mu = graph.edge_membership(u, v)
            bound = graph.endpoint_bound(u, v)

            lo = 0 if mu.lo > 0 else bound.lo
            hi = 0 if mu.hi > 0 else bound.hi
            complement_mu = Interval(lo, hi)

            if not complement_mu.is_zero():
                edges[(u, v)] = complement_mu

        return IVFuzzyGraph(graph.vertex_mu, edges)

    @staticmethod
    def is_self_complementary(graph: IVFuzzyGraph) -> bool:
        """
        補グラフの補グラフが元のグラフと一致するかの判定

        明示的な[0, 0]の辺は補グラフを二度とると失われるので、一致しない

        Parameters
        ----------
        graph : IVFuzzyGraph
            完全グラフ

        Returns
        -------
        bool
            頂点の所属度と辺の所属度が完全に一致する場合True

        Raises
        ------
        NotCompleteError
            完全グラフでない場合
        """
        double = CompleteGraphAnalyzer.complement(
            CompleteGraphAnalyzer.complement(graph)
        )

        return double == graph

    @staticmethod
    def is_strongly_self_complementary(
            graph: IVFuzzyGraph, finder: MorphismFinder | None = None
    ) -> bool:
        """
        補グラフと同型かの判定

        Parameters
        ----------
        graph : IVFuzzyGraph
            完全グラフ
        finder : MorphismFinder | None, optional
            探索機、Noneの場合は既定の予算, by default None

        Returns
        -------
        bool
            補グラフへの同型写像が存在する場合True

        Raises
        ------
        NotCompleteError
            完全グラフでない場合
        BudgetExceededError
            探索の予算を超えた場合
        """
        finder = finder or MorphismFinder()
        complement = CompleteGraphAnalyzer.complement(graph)

        return finder.find(graph, complement, MorphismKind.ISOMORPHISM) is not None

    @staticmethod
    def sum_identity(graph: IVFuzzyGraph) -> SumIdentityReport:
        """
        総和の比較

        Parameters
        ----------
        graph : IVFuzzyGraph
            グラフ

        Returns
        -------
        SumIdentityReport
            非順序対全てについての総和
        """
        lhs_lo = lhs_hi = rhs_lo = rhs_hi = Fraction(0)

        for u, v in graph.pairs():
            mu = graph.edge_membership(u, v)
            bound = graph.endpoint_bound(u, v)

            lhs_lo += mu.lo
            lhs_hi += mu.hi
            rhs_lo += bound.lo
            rhs_hi += bound.hi

        return SumIdentityReport(lhs_lo, lhs_hi, rhs_lo, rhs_hi)

    @staticmethod
    def is_saturated(graph: IVFuzzyGraph) -> bool:
        """
        全ての組の所属度が端点の最小値と一致するかの判定

        Returns
        -------
        bool
            存在しない辺も含め、全ての非順序対でB(xy) = rmin(A(x), A(y))の場合True
        """
        return all(
            graph.edge_membership(u, v) == graph.endpoint_bound(u, v)
            for u, v in graph.pairs()
        )

    @staticmethod
    def check_saturated_self_complementary(graph: IVFuzzyGraph) -> bool:
        """
        飽和したグラフの自己補対性

        Parameters
        ----------
        graph : IVFuzzyGraph
            全ての組で辺の所属度が端点の最小値と一致するグラフ

        Returns
        -------
        bool
            is_self_complementaryの結果

        Raises
        ------
        HypothesisNotMetError
            辺の所属度が端点の最小値と一致しない組がある場合
        """
        if not CompleteGraphAnalyzer.is_saturated(graph):
            raise HypothesisNotMetError(
                '全ての組で辺の所属度が端点の所属度の最小値と一致していません'
            )

        return CompleteGraphAnalyzer.is_self_complementary(graph)
