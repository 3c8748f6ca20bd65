import hashlib
import logging
import random
from collections import Counter
from collections.abc import Iterator
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from math import factorial

from classes.graph.fuzzy_graph import Edge, IVFuzzyGraph, VertexId
from classes.interval import Interval
from classes.oracle.params import GenParams

logger = logging.getLogger(__name__)


class GraphGenerator:
    """
    小さなグラフの生成機

    所属度は全てg等分の刻みに乗る
    生成されるグラフは常に区間値ファジーグラフで、[0, 0]の辺は置かない
    """

    _prefix: str = 'v'

    @staticmethod
    def derive_seed(seed: int, trial: int) -> int:
        """
        試行ごとのシード

        マスターシードと試行番号だけから決まり、実行順序に依存しない

        Parameters
        ----------
        seed : int
            マスターシード
        trial : int
            試行番号

        Returns
        -------
        int
            64ビットのシード
        """
        digest = hashlib.sha256(f'{seed}:{trial}'.encode('utf-8')).digest()

        return int.from_bytes(digest[:8], 'big')

    @staticmethod
    def vertex_ids(count: int, prefix: str = _prefix) -> list[VertexId]:
        return [f'{prefix}{i}' for i in range(count)]

    @staticmethod
    def generate(params: GenParams, prefix: str = _prefix) -> IVFuzzyGraph:
        """
        グラフの生成

        Parameters
        ----------
        params : GenParams
            生成条件、頂点数はそのまま使う
        prefix : str, optional
            頂点IDの接頭辞, by default 'v'

        Returns
        -------
        IVFuzzyGraph
            シードが同じなら同じグラフ
        """
        rng = random.Random(params.seed)

        return GraphGenerator.draw(rng, params.vertex_count, params, prefix)

    @staticmethod
    def draw(
            rng: random.Random,
            vertex_count: int,
            params: GenParams,
            prefix: str = _prefix
    ) -> IVFuzzyGraph:
        """
        乱数生成器からのグラフの生成

        Parameters
        ----------
        rng : random.Random
            乱数生成器
        vertex_count : int
            頂点数
        params : GenParams
            辺の確率、所属度の刻み、完全グラフにするかどうか
        prefix : str, optional
            頂点IDの接頭辞, by default 'v'

        Returns
        -------
        IVFuzzyGraph
            グラフ
        """
        g = params.membership_grid
        vertices = {
            vertex: GraphGenerator._draw_interval(rng, g, g, g)
            for vertex in GraphGenerator.vertex_ids(vertex_count, prefix)
        }
        graph = IVFuzzyGraph(vertices)
        edges: dict[Edge, Interval] = {}

        for u, v in graph.pairs():
            if not GraphGenerator._chance(rng, params.edge_probability):
                continue

            bound = graph.endpoint_bound(u, v)

            if params.complete_only:
                mu = bound

            else:
                mu = GraphGenerator._draw_interval(
                    rng, g, int(bound.lo * g), int(bound.hi * g)
                )

            if not mu.is_zero():
                edges[(u, v)] = mu

        return IVFuzzyGraph(vertices, edges)

    @staticmethod
    def _chance(rng: random.Random, probability: Fraction) -> bool:
        return rng.randrange(probability.denominator) < probability.numerator

    @staticmethod
    def _draw_interval(rng: random.Random, g: int, lo_max: int, hi_max: int) -> Interval:
        """
        刻みに乗った区間数の抽選

        Parameters
        ----------
        rng : random.Random
            乱数生成器
        g : int
            刻み
        lo_max : int
            下界の分子の最大値
        hi_max : int
            上界の分子の最大値、lo_max以上

        Returns
        -------
        Interval
            [lo/g, hi/g]
        """
        lo = rng.randint(0, lo_max)
        hi = rng.randint(lo, hi_max)

        return Interval(Fraction(lo, g), Fraction(hi, g))

    @staticmethod
    def grid_intervals(g: int) -> list[Interval]:
        """
        刻みに乗った全ての区間数

        Parameters
        ----------
        g : int
            刻み

        Returns
        -------
        list[Interval]
            (g + 1)(g + 2) / 2 個の区間数、(lo, hi)の辞書順
        """
        return [
            Interval(Fraction(lo, g), Fraction(hi, g))
            for lo in range(g + 1)
            for hi in range(lo, g + 1)
        ]

    @staticmethod
    def edge_options(bound: Interval, g: int) -> list[Interval]:
        """
        端点の最小値がboundのときに取り得る辺の所属度

        [0, 0]は辺がないことを表す

        Parameters
        ----------
        bound : Interval
            刻みに乗った端点の所属度のrmin
        g : int
            刻み

        Returns
        -------
        list[Interval]
            bound以下の刻みに乗った全ての区間数
        """
        return [mu for mu in GraphGenerator.grid_intervals(g) if mu <= bound]

    @staticmethod
    def enumerate(
            vertex_count: int, g: int, prefix: str = _prefix
    ) -> Iterator[IVFuzzyGraph]:
        """
        ラベル付きのグラフの列挙

        Parameters
        ----------
        vertex_count : int
            頂点数
        g : int
            刻み
        prefix : str, optional
            頂点IDの接頭辞, by default 'v'

        Yields
        ------
        IVFuzzyGraph
            頂点の所属度と各組の辺の所属度の全ての組み合わせ
        """
        vertices = GraphGenerator.vertex_ids(vertex_count, prefix)
        intervals = GraphGenerator.grid_intervals(g)

        for memberships in product(intervals, repeat=vertex_count):
            skeleton = IVFuzzyGraph(zip(vertices, memberships))
            pairs = list(skeleton.pairs())
            options = [
                GraphGenerator.edge_options(skeleton.endpoint_bound(u, v), g)
                for u, v in pairs
            ]

            for choice in product(*options):
                edges = [
                    (pair, mu) for pair, mu in zip(pairs, choice) if not mu.is_zero()
                ]

                yield IVFuzzyGraph(skeleton.vertex_mu, edges)

    @staticmethod
    def count_instances(vertex_count: int, g: int) -> int:
        """
        列挙されるグラフの数

        区間数[L/g, H/g]以下の刻みに乗った区間数は (L + 1)(H + 1) - L(L + 1)/2 個
        組ごとの数の積は頂点の並びによらないので、所属度の多重集合ごとに数える

        Parameters
        ----------
        vertex_count : int
            頂点数
        g : int
            刻み

        Returns
        -------
        int
            enumerate()が返すグラフの数
        """
        bounds = [
            (int(mu.lo * g), int(mu.hi * g)) for mu in GraphGenerator.grid_intervals(g)
        ]
        total = 0

        for memberships in combinations_with_replacement(bounds, vertex_count):
            count = factorial(vertex_count)

            for repeat in Counter(memberships).values():
                count //= factorial(repeat)

            for (lo1, hi1), (lo2, hi2) in combinations(memberships, 2):
                lo, hi = min(lo1, lo2), min(hi1, hi2)
                count *= (lo + 1) * (hi + 1) - lo * (lo + 1) // 2

            total += count

        logger.debug('頂点%d 刻み%d: %d個', vertex_count, g, total)

        return total

    @staticmethod
    def inject_violation(
            graph: IVFuzzyGraph, rng: random.Random, g: int
    ) -> IVFuzzyGraph:
        """
        辺の上界違反の注入

        頂点xの所属度を[0, 0]にし、xと別の頂点yの辺を[0, 1/g]にする

        Parameters
        ----------
        graph : IVFuzzyGraph
            頂点が二つ以上のグラフ
        rng : random.Random
            乱数生成器
        g : int
            刻み

        Returns
        -------
        IVFuzzyGraph
            区間値ファジーグラフでない、検証前のグラフ
        """
        x, y = rng.sample(graph.vertices, 2)
        vertices = dict(graph.vertex_mu.items())
        vertices[x] = Interval(0, 0)
        edges = dict(graph.edge_mu.items())
        edges[IVFuzzyGraph.edge_key(x, y)] = Interval(0, Fraction(1, g))

        return IVFuzzyGraph(vertices, edges)
