from itertools import product

import networkx as nx

from classes.graph.pair_vertex import PairVertexCodec


class CrispConstructions:
    """
    単純グラフの構成

    区間値ファジーグラフの演算の所属度を忘れた影を、networkxで独立に計算する
    """

    @staticmethod
    def _encode_pairs(graph: nx.Graph, codec: PairVertexCodec) -> nx.Graph:
        return nx.relabel_nodes(graph, {node: codec.encode(*node) for node in graph})

    @staticmethod
    def cartesian_product(
            g1: nx.Graph, g2: nx.Graph, codec: PairVertexCodec
    ) -> nx.Graph:
        return CrispConstructions._encode_pairs(nx.cartesian_product(g1, g2), codec)

    @staticmethod
    def composition(g1: nx.Graph, g2: nx.Graph, codec: PairVertexCodec) -> nx.Graph:
        """
        合成 G1[G2]

        networkxの辞書式積と同じ辺集合になる

        Parameters
        ----------
        g1 : nx.Graph
            外側のグラフ
        g2 : nx.Graph
            内側のグラフ
        codec : PairVertexCodec
            組頂点IDの符号化機

        Returns
        -------
        nx.Graph
            合成グラフ
        """
        return CrispConstructions._encode_pairs(
            nx.lexicographic_product(g1, g2), codec
        )

    @staticmethod
    def union(g1: nx.Graph, g2: nx.Graph) -> nx.Graph:
        return nx.compose(g1, g2)

    @staticmethod
    def join(g1: nx.Graph, g2: nx.Graph) -> nx.Graph:
        """
        結合 G1 + G2

        Parameters
        ----------
        g1 : nx.Graph
            左のグラフ
        g2 : nx.Graph
            右のグラフ、頂点集合はg1と素

        Returns
        -------
        nx.Graph
            和に、V1とV2を結ぶ全ての辺を加えたグラフ
        """
        joined = nx.compose(g1, g2)
        joined.add_edges_from(product(g1.nodes, g2.nodes))

        return joined

    @staticmethod
    def complement(graph: nx.Graph) -> nx.Graph:
        return nx.complement(graph)

    @staticmethod
    def same(g1: nx.Graph, g2: nx.Graph) -> bool:
        """
        ラベル付きグラフとしての一致

        Parameters
        ----------
        g1 : nx.Graph
            グラフ
        g2 : nx.Graph
            グラフ

        Returns
        -------
        bool
            頂点集合と辺集合が等しい場合True
        """
        edges1 = {frozenset(edge) for edge in g1.edges}
        edges2 = {frozenset(edge) for edge in g2.edges}

        return set(g1.nodes) == set(g2.nodes) and edges1 == edges2
