from classes.errors import NotBijectiveError, PartialMappingError
from classes.graph.fuzzy_graph import IVFuzzyGraph, VertexId
from classes.interval import Interval, ZERO
from classes.morphism.kind import MorphismKind
from classes.morphism.mapping import VertexMapping


class MorphismChecker:
    """
    与えられた写像の種類の判定
    """

    @staticmethod
    def image_membership(g2: IVFuzzyGraph, u: VertexId, v: VertexId) -> Interval:
        """
        像の組の所属度

        準同型では二つの端点が同じ頂点に写ることがあり、その場合は[0, 0]とする

        Parameters
        ----------
        g2 : IVFuzzyGraph
            終域のグラフ
        u : VertexId
            像の端点
        v : VertexId
            像のもう一方の端点

        Returns
        -------
        Interval
            所属度
        """
        if u == v:
            return ZERO

        return g2.edge_membership(u, v)

    @staticmethod
    def check_shape(
            g1: IVFuzzyGraph,
            g2: IVFuzzyGraph,
            f: VertexMapping,
            kind: MorphismKind
    ) -> None:
        """
        写像の形の確認

        Parameters
        ----------
        g1 : IVFuzzyGraph
            定義域のグラフ
        g2 : IVFuzzyGraph
            終域のグラフ
        f : VertexMapping
            写像
        kind : MorphismKind
            種類

        Raises
        ------
        PartialMappingError
            V1全体で定義されていない場合、V1以外の頂点を含む場合、
            またはV2にない頂点に写す場合
        NotBijectiveError
            全単射が必要な種類で全単射でない場合
        """
        missing = [vertex for vertex in g1.vertices if vertex not in f]
        extra = [vertex for vertex in f if vertex not in g1]
        outside = [f[vertex] for vertex in f if f[vertex] not in g2]

        if missing or extra or outside:
            raise PartialMappingError(
                f'写像がV1 → V2になっていません'
                f'(未定義: {missing}、定義域外: {extra}、終域外: {outside})'
            )

        if kind.bijective and (not f.is_injective() or len(g1) != len(g2)):
            raise NotBijectiveError(f'{kind.value}には全単射が必要です')

    @staticmethod
    def failures(
            g1: IVFuzzyGraph,
            g2: IVFuzzyGraph,
            f: VertexMapping,
            kind: MorphismKind
    ) -> list[str]:
        """
        満たされない条件の一覧

        Parameters
        ----------
        g1 : IVFuzzyGraph
            定義域のグラフ
        g2 : IVFuzzyGraph
            終域のグラフ
        f : VertexMapping
            写像
        kind : MorphismKind
            種類

        Returns
        -------
        list[str]
            満たされない条件の説明、空であればfはkindの写像
        """
        MorphismChecker.check_shape(g1, g2, f, kind)

        failures = []

        for x, mu in g1.vertex_mu.items():
            image = g2.membership(f[x])

            if kind.bounds_vertices and not mu <= image:
                failures.append(f'頂点 {x}: {mu} は A2({f[x]}) = {image} 以下ではありません')

            if kind.preserves_vertices and mu != image:
                failures.append(f'頂点 {x}: {mu} != A2({f[x]}) = {image}')

        for (x, y), mu in g1.edge_mu.items():
            image = MorphismChecker.image_membership(g2, f[x], f[y])

            if kind.bounds_edges and not mu <= image:
                failures.append(
                    f'辺 {x}-{y}: {mu} は B2({f[x]}-{f[y]}) = {image} 以下ではありません'
                )

            if kind.preserves_edges and mu != image:
                failures.append(f'辺 {x}-{y}: {mu} != B2({f[x]}-{f[y]}) = {image}')

        if kind.preserves_edges:
            inverse = f.inverse()

            for (u, v), mu in g2.edge_mu.items():
                preimage = g1.edge_membership(inverse[u], inverse[v])

                if mu != preimage:
                    failures.append(
                        f'辺 {u}-{v}: {mu} != B1({inverse[u]}-{inverse[v]}) = {preimage}'
                    )

        return failures

    @staticmethod
    def check(
            g1: IVFuzzyGraph,
            g2: IVFuzzyGraph,
            f: VertexMapping,
            kind: MorphismKind
    ) -> bool:
        return not MorphismChecker.failures(g1, g2, f, kind)
