import logging
from collections import Counter

import networkx as nx

from classes.errors import BudgetExceededError
from classes.graph.fuzzy_graph import IVFuzzyGraph, VertexId
from classes.morphism.checker import MorphismChecker
from classes.morphism.kind import MorphismKind
from classes.morphism.mapping import VertexMapping
from constants import DEFAULT_NODE_BUDGET

logger = logging.getLogger(__name__)


class MorphismFinder:
    """
    写像の探索機

    G1の頂点を(所属度, 次数の降順, ID)の順に並べ、G2の頂点を頂点の順序で試す
    バックトラックで探索する

    枝刈りを有効にすると、所属度の多重集合の比較、候補の絞り込み、部分的な割り当ての
    確認を行う。枝刈りは失敗が確定した枝だけを捨てるので、見つかる写像は枝刈りの
    有無によらず同じになる

    Attributes
    ----------
    _node_budget : int
        試す割り当ての数の上限
    _prune : bool
        枝刈りを行うかどうか
    _nodes : int
        直前の探索で試した割り当ての数
    """

    def __init__(self, node_budget: int = DEFAULT_NODE_BUDGET, prune: bool = True):
        """
        コンストラクタ

        Parameters
        ----------
        node_budget : int, optional
            試す割り当ての数の上限, by default DEFAULT_NODE_BUDGET
        prune : bool, optional
            枝刈りを行うかどうか, by default True

        Raises
        ------
        ValueError
            予算が負の場合
        """
        if node_budget < 0:
            raise ValueError(f'予算は0以上にしてください: {node_budget}')

        self._node_budget = node_budget
        self._prune = prune
        self._nodes = 0

    @property
    def nodes(self) -> int:
        return self._nodes

    def find(
            self, g1: IVFuzzyGraph, g2: IVFuzzyGraph, kind: MorphismKind
    ) -> VertexMapping | None:
        """
        写像の探索

        Parameters
        ----------
        g1 : IVFuzzyGraph
            定義域のグラフ
        g2 : IVFuzzyGraph
            終域のグラフ
        kind : MorphismKind
            種類

        Returns
        -------
        VertexMapping | None
            kindの写像、存在しなければNone

        Raises
        ------
        BudgetExceededError
            試した割り当ての数が予算を超えた場合
        """
        self._nodes = 0

        if kind.bijective and len(g1) != len(g2):
            return None

        if len(g1) > 0 and len(g2) == 0:
            return None

        if self._prune and not self._invariants_match(g1, g2, kind):
            logger.debug('%s: 不変量が一致しないので探索しません', kind.value)

            return None

        order = sorted(
            g1.vertices,
            key=lambda x: (g1.membership(x).sort_key(), -g1.degree(x), x)
        )
        candidates = {x: self._candidates(g1, g2, kind, x) for x in order}

        assignment: dict[VertexId, VertexId] = {}
        found = self._search(g1, g2, kind, order, candidates, assignment, set())

        logger.debug('%s: 割り当て%d回', kind.value, self._nodes)

        if not found:
            return None

        return VertexMapping((x, assignment[x]) for x in g1.vertices)

    def _search(
            self,
            g1: IVFuzzyGraph,
            g2: IVFuzzyGraph,
            kind: MorphismKind,
            order: list[VertexId],
            candidates: dict[VertexId, list[VertexId]],
            assignment: dict[VertexId, VertexId],
            used: set[VertexId]
    ) -> bool:
        """
        バックトラック

        Parameters
        ----------
        g1 : IVFuzzyGraph
            定義域のグラフ
        g2 : IVFuzzyGraph
            終域のグラフ
        kind : MorphismKind
            種類
        order : list[VertexId]
            割り当てる順のG1の頂点
        candidates : dict[VertexId, list[VertexId]]
            各頂点の像の候補
        assignment : dict[VertexId, VertexId]
            割り当て済みの対応、見つかった場合は完全な写像が残る
        used : set[VertexId]
            像として使用済みのG2の頂点

        Returns
        -------
        bool
            写像が見つかった場合True
        """
        depth = len(assignment)

        if depth == len(order):
            mapping = VertexMapping(assignment)

            return MorphismChecker.check(g1, g2, mapping, kind)

        x = order[depth]

        for y in candidates[x]:
            if kind.bijective and y in used:
                continue

            self._nodes += 1

            if self._nodes > self._node_budget:
                raise BudgetExceededError(
                    f'探索の予算({self._node_budget}回)を超えました'
                )

            if self._prune and not self._consistent(g1, g2, kind, assignment, x, y):
                continue

            assignment[x] = y
            used.add(y)

            if self._search(g1, g2, kind, order, candidates, assignment, used):
                return True

            del assignment[x]
            used.discard(y)

        return False

    def _candidates(
            self,
            g1: IVFuzzyGraph,
            g2: IVFuzzyGraph,
            kind: MorphismKind,
            x: VertexId
    ) -> list[VertexId]:
        """
        像の候補

        Parameters
        ----------
        g1 : IVFuzzyGraph
            定義域のグラフ
        g2 : IVFuzzyGraph
            終域のグラフ
        kind : MorphismKind
            種類
        x : VertexId
            G1の頂点

        Returns
        -------
        list[VertexId]
            G2の頂点の順序に従う候補
        """
        if not self._prune:
            return g2.vertices

        mu = g1.membership(x)
        candidates = []

        for y in g2.vertices:
            image = g2.membership(y)

            if kind.preserves_vertices and mu != image:
                continue

            if kind.bounds_vertices and not mu <= image:
                continue

            if kind.preserves_edges and (
                MorphismFinder._positive_degree(g1, x)
                != MorphismFinder._positive_degree(g2, y)
            ):
                continue

            candidates.append(y)

        return candidates

    @staticmethod
    def _consistent(
            g1: IVFuzzyGraph,
            g2: IVFuzzyGraph,
            kind: MorphismKind,
            assignment: dict[VertexId, VertexId],
            x: VertexId,
            y: VertexId
    ) -> bool:
        """
        部分的な割り当ての確認

        x → y を加えたときに、割り当て済みの頂点との組で条件が崩れないか確認する

        Returns
        -------
        bool
            条件が崩れない場合True
        """
        for w, image in assignment.items():
            mu = g1.edge_membership(x, w)
            image_mu = MorphismChecker.image_membership(g2, y, image)

            if kind.bounds_edges and not mu <= image_mu:
                return False

            if kind.preserves_edges and mu != image_mu:
                return False

        return True

    @staticmethod
    def _invariants_match(
            g1: IVFuzzyGraph, g2: IVFuzzyGraph, kind: MorphismKind
    ) -> bool:
        """
        全単射の種類で必要な不変量の比較

        Returns
        -------
        bool
            写像が存在し得る場合True
        """
        if kind.preserves_vertices:
            mu1 = Counter(mu for _, mu in g1.vertex_mu.items())
            mu2 = Counter(mu for _, mu in g2.vertex_mu.items())

            if mu1 != mu2:
                return False

        if kind.preserves_edges:
            if MorphismFinder._positive_edges(g1) != MorphismFinder._positive_edges(g2):
                return False

            if not nx.faster_could_be_isomorphic(
                    g1.crisp_skeleton(positive_only=True),
                    g2.crisp_skeleton(positive_only=True)
            ):
                return False

        return True

    @staticmethod
    def _positive_edges(graph: IVFuzzyGraph) -> Counter:
        return Counter(mu for _, mu in graph.edge_mu.items() if not mu.is_zero())

    @staticmethod
    def _positive_degree(graph: IVFuzzyGraph, vertex: VertexId) -> int:
        return sum(
            1 for edge, mu in graph.edge_mu.items()
            if vertex in edge and not mu.is_zero()
        )
