import logging
from functools import reduce

from classes.errors import NonDisjointVertexSetsError
from classes.graph.fuzzy_graph import Edge, IVFuzzyGraph, VertexId
from classes.graph.pair_vertex import PairVertexCodec
from classes.interval import Interval
from constants import DEFAULT_SEPARATOR

logger = logging.getLogger(__name__)


class GraphOperator:
    """
    区間値ファジーグラフの二項演算機

    直積、合成、和、結合を定義どおりに計算する

    Attributes
    ----------
    _codec : PairVertexCodec
        組頂点IDの符号化機
    _strict : bool
        Trueの場合、入力が区間値ファジーグラフであることを要求し、
        結果も区間値ファジーグラフであることを確認する
    """

    def __init__(self, separator: str = DEFAULT_SEPARATOR, strict: bool = True):
        """
        コンストラクタ

        Parameters
        ----------
        separator : str, optional
            組頂点IDの区切り文字, by default DEFAULT_SEPARATOR
        strict : bool, optional
            入力と結果を検証するかどうか, by default True
        """
        self._codec = PairVertexCodec(separator)
        self._strict = strict

    @property
    def codec(self) -> PairVertexCodec:
        return self._codec

    def cartesian_product(self, g1: IVFuzzyGraph, g2: IVFuzzyGraph) -> IVFuzzyGraph:
        """
        直積 G1 × G2

        Parameters
        ----------
        g1 : IVFuzzyGraph
            左のグラフ
        g2 : IVFuzzyGraph
            右のグラフ

        Returns
        -------
        IVFuzzyGraph
            頂点はV1 × V2、辺は(x, x2)(x, y2)と(x1, z)(y1, z)の二系統

        Raises
        ------
        SeparatorCollisionError
            区切り文字を含む頂点がある場合
        ValidationErrors
            strictで入力が区間値ファジーグラフでない場合
        """
        self._check_inputs(g1, g2)
        self._codec.check(g1.vertices + g2.vertices)

        vertices = self._pair_vertices(g1, g2)
        edges: dict[Edge, Interval] = {}

        self._add_cartesian_edges(g1, g2, edges)

        return self._finish(vertices, edges, 'product')

    def composition(self, g1: IVFuzzyGraph, g2: IVFuzzyGraph) -> IVFuzzyGraph:
        """
        合成 G1[G2]

        直積の辺に加えて、x1y1がE1の辺で x2 != y2 である全ての
        (x1, x2)(y1, y2) に min(A2(x2), A2(y2), B1(x1y1)) を与える
        可換ではない

        Parameters
        ----------
        g1 : IVFuzzyGraph
            外側のグラフ
        g2 : IVFuzzyGraph
            内側のグラフ

        Returns
        -------
        IVFuzzyGraph
            合成グラフ

        Raises
        ------
        SeparatorCollisionError
            区切り文字を含む頂点がある場合
        ValidationErrors
            strictで入力が区間値ファジーグラフでない場合
        """
        self._check_inputs(g1, g2)
        self._codec.check(g1.vertices + g2.vertices)

        vertices = self._pair_vertices(g1, g2)
        edges: dict[Edge, Interval] = {}

        self._add_cartesian_edges(g1, g2, edges)

        for (x1, y1), mu1 in g1.edge_mu.items():
            for x2 in g2.vertices:
                for y2 in g2.vertices:
                    if x2 == y2:
                        continue

                    mu = reduce(
                        Interval.rmin,
                        (g2.membership(x2), g2.membership(y2), mu1)
                    )
                    self._put_edge(edges, (x1, x2), (y1, y2), mu)

        return self._finish(vertices, edges, 'composition')

    def union(self, g1: IVFuzzyGraph, g2: IVFuzzyGraph) -> IVFuzzyGraph:
        """
        和 G1 ∪ G2

        片方にだけある頂点と辺は所属度をそのまま、共有されるものは成分ごとの最大値
        同じIDの頂点は同一の頂点として扱い、付け替えは行わない

        Parameters
        ----------
        g1 : IVFuzzyGraph
            左のグラフ
        g2 : IVFuzzyGraph
            右のグラフ

        Returns
        -------
        IVFuzzyGraph
            和グラフ

        Raises
        ------
        ValidationErrors
            strictで入力が区間値ファジーグラフでない場合
        """
        self._check_inputs(g1, g2)

        vertices = g1.vertex_mu.union(g2.vertex_mu)
        edges = g1.edge_mu.union(g2.edge_mu)

        return self._finish(dict(vertices.items()), dict(edges.items()), 'union')

    def join(self, g1: IVFuzzyGraph, g2: IVFuzzyGraph) -> IVFuzzyGraph:
        """
        結合 G1 + G2

        和に加えて、V1とV2を結ぶ全ての組xyに rmin(A1(x), A2(y)) を与える

        Parameters
        ----------
        g1 : IVFuzzyGraph
            左のグラフ
        g2 : IVFuzzyGraph
            右のグラフ

        Returns
        -------
        IVFuzzyGraph
            結合グラフ

        Raises
        ------
        NonDisjointVertexSetsError
            頂点集合が共通部分を持つ場合
        ValidationErrors
            strictで入力が区間値ファジーグラフでない場合
        """
        shared = sorted(set(g1.vertices) & set(g2.vertices))

        if shared:
            raise NonDisjointVertexSetsError(
                f'結合には素な頂点集合が必要です。共通の頂点: {", ".join(shared)}'
            )

        self._check_inputs(g1, g2)

        vertices = g1.vertex_mu.union(g2.vertex_mu)
        edges = dict(g1.edge_mu.union(g2.edge_mu).items())

        for x, mu_x in g1.vertex_mu.items():
            for y, mu_y in g2.vertex_mu.items():
                edges[IVFuzzyGraph.edge_key(x, y)] = mu_x.rmin(mu_y)

        return self._finish(dict(vertices.items()), edges, 'join')

    def _check_inputs(self, g1: IVFuzzyGraph, g2: IVFuzzyGraph) -> None:
        if self._strict:
            g1.ensure_valid()
            g2.ensure_valid()

    def _pair_vertices(
            self, g1: IVFuzzyGraph, g2: IVFuzzyGraph
    ) -> dict[VertexId, Interval]:
        """
        組頂点の所属度

        Parameters
        ----------
        g1 : IVFuzzyGraph
            左のグラフ
        g2 : IVFuzzyGraph
            右のグラフ

        Returns
        -------
        dict[VertexId, Interval]
            V1の順、その中でV2の順に並んだ rmin(A1(x1), A2(x2))
        """
        return {
            self._codec.encode(x1, x2): mu1.rmin(mu2)
            for x1, mu1 in g1.vertex_mu.items()
            for x2, mu2 in g2.vertex_mu.items()
        }

    def _add_cartesian_edges(
            self,
            g1: IVFuzzyGraph,
            g2: IVFuzzyGraph,
            edges: dict[Edge, Interval]
    ) -> None:
        """
        直積の二系統の辺の追加

        Parameters
        ----------
        g1 : IVFuzzyGraph
            左のグラフ
        g2 : IVFuzzyGraph
            右のグラフ
        edges : dict[Edge, Interval]
            追加先
        """
        for x, mu_x in g1.vertex_mu.items():
            for (x2, y2), mu2 in g2.edge_mu.items():
                self._put_edge(edges, (x, x2), (x, y2), mu_x.rmin(mu2))

        for (x1, y1), mu1 in g1.edge_mu.items():
            for z, mu_z in g2.vertex_mu.items():
                self._put_edge(edges, (x1, z), (y1, z), mu1.rmin(mu_z))

    def _put_edge(
            self,
            edges: dict[Edge, Interval],
            p: tuple[VertexId, VertexId],
            q: tuple[VertexId, VertexId],
            mu: Interval
    ) -> None:
        """
        組頂点間の辺の追加

        Parameters
        ----------
        edges : dict[Edge, Interval]
            追加先
        p : tuple[VertexId, VertexId]
            端点の組
        q : tuple[VertexId, VertexId]
            もう一方の端点の組
        mu : Interval
            所属度

        Raises
        ------
        RuntimeError
            同じ辺が二つの系統から作られた場合
        """
        key = IVFuzzyGraph.edge_key(self._codec.encode(*p), self._codec.encode(*q))

        if key in edges:
            raise RuntimeError(f'辺が二重に作られました: {key}')

        edges[key] = mu

    def _finish(
            self,
            vertices: dict[VertexId, Interval],
            edges: dict[Edge, Interval],
            name: str
    ) -> IVFuzzyGraph:
        graph = IVFuzzyGraph(vertices, edges)

        logger.debug(
            '%s: 頂点%d 辺%d', name, len(graph), len(graph.edge_mu)
        )

        if self._strict:
            graph.ensure_valid()

        return graph
