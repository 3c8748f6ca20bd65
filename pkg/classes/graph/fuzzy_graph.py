import logging
import re
from collections.abc import Iterable, Iterator, Mapping
from itertools import combinations

import networkx as nx

from classes.document.graph_document import EdgeEntry, GraphDocument, VertexEntry
from classes.errors import (
    IntervalRangeError, LoopQueryError, UnknownVertexError, ValidationErrors,
    Violation, ViolationKind
)
from classes.graph.fuzzy_set import IVFuzzySet
from classes.interval import Interval, ZERO
from constants import DOCUMENT_VERSION

VertexId = str
Edge = tuple[VertexId, VertexId]

logger = logging.getLogger(__name__)

_WHITESPACE = re.compile(r'\s')


class IVFuzzyGraph:
    """
    区間値ファジーグラフ G = (A, B)

    構築時には構造上の不変条件(端点が宣言済み、ループなし、辺の重複なし)だけを確認する
    辺の所属度が端点の所属度のrminを超えないという条件は、violations()で確認する
    存在しない辺の所属度は[0, 0]とみなす

    Attributes
    ----------
    _vertex_mu : IVFuzzySet[VertexId]
        頂点の所属度A、挿入順が頂点の順序
    _edge_mu : IVFuzzySet[Edge]
        辺の所属度B、キーは正規化された辺
    """

    def __init__(
            self,
            vertex_mu: Mapping[VertexId, Interval] | IVFuzzySet[VertexId] | Iterable[tuple[VertexId, Interval]],
            edge_mu: Mapping[Edge, Interval] | IVFuzzySet[Edge] | Iterable[tuple[Edge, Interval]] = ()
    ):
        """
        コンストラクタ

        Parameters
        ----------
        vertex_mu : Mapping[VertexId, Interval] | IVFuzzySet[VertexId] | Iterable[tuple[VertexId, Interval]]
            頂点と所属度
        edge_mu : Mapping[Edge, Interval] | IVFuzzySet[Edge] | Iterable[tuple[Edge, Interval]], optional
            辺と所属度、辺の向きは問わない, by default ()

        Raises
        ------
        ValidationErrors
            構造上の不変条件を満たさない場合
        """
        vertex_items = list(
            vertex_mu.items() if isinstance(vertex_mu, (Mapping, IVFuzzySet)) else vertex_mu
        )
        edge_items = list(
            edge_mu.items() if isinstance(edge_mu, (Mapping, IVFuzzySet)) else edge_mu
        )

        violations: list[Violation] = []
        vertices: dict[VertexId, Interval] = {}

        for vertex, mu in vertex_items:
            if vertex in vertices:
                violations.append(Violation(
                    ViolationKind.DUPLICATE_VERTEX, vertex, '頂点が重複しています'
                ))

            vertices[vertex] = mu

        edges: dict[Edge, Interval] = {}

        for (u, v), mu in edge_items:
            if u == v:
                violations.append(Violation(
                    ViolationKind.LOOP_EDGE,
                    IVFuzzyGraph.edge_name(u, v),
                    'ループは使えません'
                ))
                continue

            unknown = [w for w in (u, v) if w not in vertices]

            if unknown:
                violations.append(Violation(
                    ViolationKind.UNKNOWN_ENDPOINT,
                    IVFuzzyGraph.edge_name(u, v),
                    f'宣言されていない端点です: {", ".join(unknown)}'
                ))
                continue

            key = IVFuzzyGraph.edge_key(u, v)

            if key in edges:
                violations.append(Violation(
                    ViolationKind.DUPLICATE_EDGE,
                    IVFuzzyGraph.edge_name(*key),
                    '辺が重複しています'
                ))

            edges[key] = mu

        if violations:
            raise ValidationErrors(violations)

        self._vertex_mu: IVFuzzySet[VertexId] = IVFuzzySet(vertices)
        self._edge_mu: IVFuzzySet[Edge] = IVFuzzySet(edges)

    @staticmethod
    def edge_key(u: VertexId, v: VertexId) -> Edge:
        """
        正規化された辺

        Parameters
        ----------
        u : VertexId
            端点
        v : VertexId
            もう一方の端点

        Returns
        -------
        Edge
            辞書順で小さい端点が先の組
        """
        return (u, v) if u <= v else (v, u)

    @staticmethod
    def edge_name(u: VertexId, v: VertexId) -> str:
        return f'{u}-{v}'

    @classmethod
    def empty(cls) -> 'IVFuzzyGraph':
        return cls({})

    @property
    def vertices(self) -> list[VertexId]:
        return list(self._vertex_mu)

    @property
    def edges(self) -> list[Edge]:
        return list(self._edge_mu)

    @property
    def vertex_mu(self) -> IVFuzzySet[VertexId]:
        return self._vertex_mu

    @property
    def edge_mu(self) -> IVFuzzySet[Edge]:
        return self._edge_mu

    def __len__(self) -> int:
        return len(self._vertex_mu)

    def __contains__(self, vertex: object) -> bool:
        return vertex in self._vertex_mu

    def membership(self, vertex: VertexId) -> Interval:
        """
        頂点の所属度

        Parameters
        ----------
        vertex : VertexId
            頂点

        Returns
        -------
        Interval
            A(vertex)

        Raises
        ------
        UnknownVertexError
            頂点が存在しない場合
        """
        if vertex not in self._vertex_mu:
            raise UnknownVertexError(f'頂点が存在しません: {vertex!r}')

        return self._vertex_mu[vertex]

    def edge_membership(self, u: VertexId, v: VertexId) -> Interval:
        """
        辺の所属度

        Bを全ての頂点の組に拡張したもの

        Parameters
        ----------
        u : VertexId
            端点
        v : VertexId
            もう一方の端点

        Returns
        -------
        Interval
            辺が存在すればB(uv)、存在しなければ[0, 0]

        Raises
        ------
        UnknownVertexError
            頂点が存在しない場合
        LoopQueryError
            u == v の場合
        """
        for vertex in (u, v):
            if vertex not in self._vertex_mu:
                raise UnknownVertexError(f'頂点が存在しません: {vertex!r}')

        if u == v:
            raise LoopQueryError(f'ループの所属度は定義されていません: {u!r}')

        return self._edge_mu.membership(IVFuzzyGraph.edge_key(u, v))

    def endpoint_bound(self, u: VertexId, v: VertexId) -> Interval:
        return self.membership(u).rmin(self.membership(v))

    def pairs(self) -> Iterator[Edge]:
        """
        異なる頂点の非順序対全て

        Yields
        ------
        Edge
            正規化された組、頂点の順序に従う
        """
        for u, v in combinations(self.vertices, 2):
            yield IVFuzzyGraph.edge_key(u, v)

    def degree(self, vertex: VertexId) -> int:
        return sum(1 for edge in self._edge_mu if vertex in edge)

    def violations(self) -> list[Violation]:
        """
        辺の上界違反の一覧

        Returns
        -------
        list[Violation]
            B(xy)がrmin(A(x), A(y))を下界側または上界側で超える全ての辺
        """
        violations = []

        for (u, v), mu in self._edge_mu.items():
            bound = self.endpoint_bound(u, v)

            if mu.lo > bound.lo:
                violations.append(Violation(
                    ViolationKind.EDGE_BOUND_VIOLATION,
                    IVFuzzyGraph.edge_name(u, v),
                    f'下界 {Interval.format_bound(mu.lo)} > '
                    f'min({u}, {v}) = {Interval.format_bound(bound.lo)}',
                    'lower'
                ))

            if mu.hi > bound.hi:
                violations.append(Violation(
                    ViolationKind.EDGE_BOUND_VIOLATION,
                    IVFuzzyGraph.edge_name(u, v),
                    f'上界 {Interval.format_bound(mu.hi)} > '
                    f'min({u}, {v}) = {Interval.format_bound(bound.hi)}',
                    'upper'
                ))

        return violations

    @property
    def is_valid(self) -> bool:
        return not self.violations()

    def ensure_valid(self) -> 'IVFuzzyGraph':
        """
        区間値ファジーグラフであることの確認

        Returns
        -------
        IVFuzzyGraph
            self

        Raises
        ------
        ValidationErrors
            辺の上界違反がある場合
        """
        violations = self.violations()

        if violations:
            raise ValidationErrors(violations)

        return self

    def crisp_skeleton(self, positive_only: bool = False) -> nx.Graph:
        """
        所属度を忘れた単純グラフ

        Parameters
        ----------
        positive_only : bool, optional
            Trueの場合、所属度が[0, 0]の辺を除く, by default False

        Returns
        -------
        nx.Graph
            頂点の順序を保った無向グラフ
        """
        crisp = nx.Graph()
        crisp.add_nodes_from(self.vertices)
        crisp.add_edges_from(
            edge for edge, mu in self._edge_mu.items()
            if not (positive_only and mu.is_zero())
        )

        return crisp

    def relabel(self, mapping: Mapping[VertexId, VertexId]) -> 'IVFuzzyGraph':
        """
        頂点の付け替え

        Parameters
        ----------
        mapping : Mapping[VertexId, VertexId]
            古い頂点から新しい頂点への単射、含まれない頂点はそのまま

        Returns
        -------
        IVFuzzyGraph
            付け替えたグラフ、頂点の順序は元の順序
        """
        def rename(vertex: VertexId) -> VertexId:
            return mapping.get(vertex, vertex)

        return IVFuzzyGraph(
            [(rename(vertex), mu) for vertex, mu in self._vertex_mu.items()],
            [((rename(u), rename(v)), mu) for (u, v), mu in self._edge_mu.items()]
        )

    def restrict(self, vertices: Iterable[VertexId]) -> 'IVFuzzyGraph':
        """
        誘導部分グラフ

        Parameters
        ----------
        vertices : Iterable[VertexId]
            残す頂点

        Returns
        -------
        IVFuzzyGraph
            指定した頂点と、両端点が含まれる辺だけのグラフ
        """
        keep = set(vertices)

        return IVFuzzyGraph(
            self._vertex_mu.restrict(keep),
            [(edge, mu) for edge, mu in self._edge_mu.items() if set(edge) <= keep]
        )

    def to_document(self) -> GraphDocument:
        """
        文書への変換

        頂点は保持している順序、辺は正規化された組の辞書順に並べる

        Returns
        -------
        GraphDocument
            正規化された文書
        """
        vertices = tuple(
            VertexEntry(vertex, (mu.lo, mu.hi))
            for vertex, mu in self._vertex_mu.items()
        )
        edges = tuple(
            EdgeEntry(u, v, (mu.lo, mu.hi))
            for (u, v), mu in sorted(self._edge_mu.items())
        )

        return GraphDocument(DOCUMENT_VERSION, vertices, edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IVFuzzyGraph):
            return NotImplemented

        return (
            dict(self._vertex_mu.items()) == dict(other._vertex_mu.items())
            and dict(self._edge_mu.items()) == dict(other._edge_mu.items())
        )

    def __repr__(self) -> str:
        return (
            f'IVFuzzyGraph(vertices={len(self._vertex_mu)}, '
            f'edges={len(self._edge_mu)})'
        )


class GraphValidator:
    """
    文書の検証機

    最初の違反で止めず、全ての違反を集める
    """

    @staticmethod
    def violations(document: GraphDocument) -> list[Violation]:
        """
        文書の全ての違反

        Parameters
        ----------
        document : GraphDocument
            文書

        Returns
        -------
        list[Violation]
            違反の一覧、違反がなければ空
        """
        violations: list[Violation] = []
        vertices: dict[VertexId, Interval | None] = {}

        for entry in document.vertices:
            if not entry.id or _WHITESPACE.search(entry.id):
                violations.append(Violation(
                    ViolationKind.INVALID_VERTEX_ID,
                    repr(entry.id),
                    '頂点IDは空白を含まない空でない文字列にしてください'
                ))

            if entry.id in vertices:
                violations.append(Violation(
                    ViolationKind.DUPLICATE_VERTEX, entry.id, '頂点が重複しています'
                ))
                continue

            mu = GraphValidator._check_range(entry.mu, entry.id, violations)
            vertices[entry.id] = mu

        seen: set[Edge] = set()

        for entry in document.edges:
            name = IVFuzzyGraph.edge_name(entry.u, entry.v)
            mu = GraphValidator._check_range(entry.mu, name, violations)

            if entry.u == entry.v:
                violations.append(Violation(
                    ViolationKind.LOOP_EDGE, name, 'ループは使えません'
                ))
                continue

            unknown = [w for w in (entry.u, entry.v) if w not in vertices]

            if unknown:
                violations.append(Violation(
                    ViolationKind.UNKNOWN_ENDPOINT,
                    name,
                    f'宣言されていない端点です: {", ".join(unknown)}'
                ))
                continue

            key = IVFuzzyGraph.edge_key(entry.u, entry.v)

            if key in seen:
                violations.append(Violation(
                    ViolationKind.DUPLICATE_EDGE, name, '辺が重複しています'
                ))
                continue

            seen.add(key)

            mu_u = vertices[entry.u]
            mu_v = vertices[entry.v]

            if mu is None or mu_u is None or mu_v is None:
                continue

            probe = IVFuzzyGraph({entry.u: mu_u, entry.v: mu_v}, {key: mu})
            violations.extend(probe.violations())

        return violations

    @staticmethod
    def _check_range(
            raw: tuple, subject: str, violations: list[Violation]
    ) -> Interval | None:
        """
        所属度の範囲の確認

        Parameters
        ----------
        raw : tuple
            有理数の組
        subject : str
            頂点または辺の名前
        violations : list[Violation]
            違反があれば追加される

        Returns
        -------
        Interval | None
            範囲内であれば区間数、範囲外であればNone
        """
        try:
            return Interval(*raw)

        except IntervalRangeError:
            lo, hi = (Interval.format_bound(bound) for bound in raw)

            violations.append(Violation(
                ViolationKind.MEMBERSHIP_OUT_OF_RANGE,
                subject,
                f'[{lo}, {hi}] は 0 <= lo <= hi <= 1 を満たしません'
            ))

            return None

    @staticmethod
    def validate(document: GraphDocument) -> IVFuzzyGraph:
        """
        文書の検証

        Parameters
        ----------
        document : GraphDocument
            文書

        Returns
        -------
        IVFuzzyGraph
            全ての不変条件を満たす場合のグラフ

        Raises
        ------
        ValidationErrors
            違反が一つでもある場合、全ての違反を持つ
        """
        violations = GraphValidator.violations(document)

        if violations:
            logger.debug('検証違反 %d件', len(violations))

            raise ValidationErrors(violations)

        return GraphValidator.build(document)

    @staticmethod
    def build(document: GraphDocument) -> IVFuzzyGraph:
        """
        未検証のグラフの作成

        構造上の不変条件と所属度の範囲だけを要求し、辺の上界は確認しない

        Parameters
        ----------
        document : GraphDocument
            文書

        Returns
        -------
        IVFuzzyGraph
            グラフ
        """
        return IVFuzzyGraph(
            [(entry.id, Interval(*entry.mu)) for entry in document.vertices],
            [((entry.u, entry.v), Interval(*entry.mu)) for entry in document.edges]
        )
