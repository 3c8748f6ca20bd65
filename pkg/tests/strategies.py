from hypothesis import strategies as st

from classes.graph.fuzzy_graph import IVFuzzyGraph
from classes.interval import Interval


def interval(lo: str, hi: str) -> Interval:
    return Interval.parse((lo, hi))


@st.composite
def intervals(draw, max_denominator: int = 20) -> Interval:
    lo = draw(st.fractions(0, 1, max_denominator=max_denominator))
    hi = draw(st.fractions(lo, 1, max_denominator=max_denominator))

    return Interval(lo, hi)


@st.composite
def graphs(draw, max_vertices: int = 4, prefix: str = 'v') -> IVFuzzyGraph:
    """
    辺の所属度が端点の最小値以下になるように作るグラフ
    """
    count = draw(st.integers(0, max_vertices))
    vertices = {f'{prefix}{i}': draw(intervals()) for i in range(count)}
    graph = IVFuzzyGraph(vertices)
    edges = {}

    for u, v in graph.pairs():
        if not draw(st.booleans()):
            continue

        bound = graph.endpoint_bound(u, v)
        scale_lo = draw(st.fractions(0, 1, max_denominator=4))
        scale_hi = draw(st.fractions(scale_lo, 1, max_denominator=4))
        lo = bound.lo * scale_lo
        hi = max(lo, bound.hi * scale_hi)
        edges[(u, v)] = Interval(lo, hi)

    return IVFuzzyGraph(vertices, edges)
