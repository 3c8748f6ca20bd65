import re

from classes.graph.fuzzy_graph import IVFuzzyGraph, VertexId

_BARE_ID = re.compile(r'[A-Za-z_][A-Za-z0-9_]*')
_KEYWORDS = frozenset({'node', 'edge', 'graph', 'digraph', 'subgraph', 'strict'})


class DotWriter:
    """
    DOT形式への書き出し

    頂点は保持している順序、辺は正規化された組の辞書順に並べる
    """

    _graph_name: str = 'G'
    _indent: str = '  '

    @staticmethod
    def quote(vertex: VertexId) -> str:
        """
        DOTのIDへの変換

        Parameters
        ----------
        vertex : VertexId
            頂点ID

        Returns
        -------
        str
            英数字と'_'だけのIDはそのまま、それ以外とDOTの予約語は二重引用符で囲む
        """
        if _BARE_ID.fullmatch(vertex) and vertex.lower() not in _KEYWORDS:
            return vertex

        escaped = vertex.replace('\\', '\\\\').replace('"', '\\"')

        return f'"{escaped}"'

    @classmethod
    def to_dot(cls, graph: IVFuzzyGraph) -> str:
        """
        DOTテキストの作成

        Parameters
        ----------
        graph : IVFuzzyGraph
            グラフ

        Returns
        -------
        str
            頂点のラベルが"id [lo,hi]"、辺のラベルが"[lo,hi]"の無向グラフ
        """
        lines = [f'graph {cls._graph_name} {{']

        for vertex, mu in graph.vertex_mu.items():
            label = f'{vertex} {mu}'.replace('"', '\\"')
            lines.append(f'{cls._indent}{cls.quote(vertex)} [label="{label}"];')

        for (u, v), mu in sorted(graph.edge_mu.items()):
            lines.append(
                f'{cls._indent}{cls.quote(u)} -- {cls.quote(v)} [label="{mu}"];'
            )

        lines.append('}')

        return '\n'.join(lines) + '\n'
