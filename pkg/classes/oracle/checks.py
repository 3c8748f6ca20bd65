from abc import ABC, abstractmethod
from collections.abc import Callable, Mapping, Sequence

import networkx as nx

from classes.document.graph_document import GraphDocument
from classes.errors import ValidationErrors, WitnessVerificationError
from classes.graph.complete import CompleteGraphAnalyzer
from classes.graph.crisp import CrispConstructions
from classes.graph.fuzzy_graph import GraphValidator, IVFuzzyGraph
from classes.graph.operations import GraphOperator
from classes.morphism.checker import MorphismChecker
from classes.morphism.finder import MorphismFinder
from classes.morphism.kind import MorphismKind
from classes.morphism.mapping import VertexMapping

Construction = Callable[[IVFuzzyGraph, IVFuzzyGraph], IVFuzzyGraph]
CrispConstruction = Callable[[nx.Graph, nx.Graph], nx.Graph]


class PropertyCheck(ABC):
    """
    性質の確認の基底抽象クラス

    Attributes
    ----------
    _name : str
        確認の名前、失敗の記録と再実行に使う
    """

    _name: str = None

    def __init__(self):
        """
        コンストラクタ
        """
        self._check_name()

    @classmethod
    def _check_name(cls) -> None:
        """
        名前の確認

        Raises
        ------
        TypeError
            名前がstrではない場合
        """
        if not isinstance(cls._name, str):
            raise TypeError(
                f'{cls.__name__}._nameをstrで再定義してください'
            )

    @property
    def name(self) -> str:
        return self._name

    def applies(self, graphs: Sequence[IVFuzzyGraph]) -> bool:
        """
        前提を満たす事例かどうか

        Parameters
        ----------
        graphs : Sequence[IVFuzzyGraph]
            入力のグラフ

        Returns
        -------
        bool
            前提を満たさない事例は確認した数に含めない
        """
        return True

    @abstractmethod
    def failure(self, graphs: Sequence[IVFuzzyGraph]) -> str | None:
        """
        性質の確認

        Parameters
        ----------
        graphs : Sequence[IVFuzzyGraph]
            入力のグラフ

        Returns
        -------
        str | None
            成り立たない場合はその内容、成り立つ場合はNone
        """
        pass


class ClosureCheck(PropertyCheck):
    """
    四つの演算の結果が区間値ファジーグラフになることの確認

    結果は文書に直列化してから読み直して検証し、所属度を忘れた形が
    単純グラフの構成と一致することも確かめる
    結合では右のグラフの頂点IDに"'"を付けて頂点集合を素にする

    Attributes
    ----------
    _operations : dict[str, Construction]
        演算の名前と演算
    _shadows : dict[str, CrispConstruction]
        演算の名前と対応する単純グラフの構成
    """

    _name: str = 'closure'
    _join_suffix: str = "'"

    def __init__(
            self,
            operator: GraphOperator,
            operations: Mapping[str, Construction] | None = None
    ):
        """
        コンストラクタ

        Parameters
        ----------
        operator : GraphOperator
            演算機
        operations : Mapping[str, Construction] | None, optional
            既定の演算を置き換える演算, by default None
        """
        super().__init__()

        codec = operator.codec

        self._operations: dict[str, Construction] = {
            'product': operator.cartesian_product,
            'composition': operator.composition,
            'union': operator.union,
            'join': operator.join,
            **(operations or {})
        }
        self._shadows: dict[str, CrispConstruction] = {
            'product': lambda g1, g2: CrispConstructions.cartesian_product(g1, g2, codec),
            'composition': lambda g1, g2: CrispConstructions.composition(g1, g2, codec),
            'union': CrispConstructions.union,
            'join': CrispConstructions.join,
        }

    def failure(self, graphs: Sequence[IVFuzzyGraph]) -> str | None:
        g1, g2 = graphs

        for name, construct in self._operations.items():
            right = self._disjoint(g2) if name == 'join' else g2

            try:
                result = construct(g1, right)
                text = result.to_document().to_text()
                GraphValidator.validate(GraphDocument.parse(text))

            except ValidationErrors as e:
                return f'{name}: {e}'

            shadow = self._shadows.get(name)

            if shadow is None:
                continue

            expected = shadow(g1.crisp_skeleton(), right.crisp_skeleton())

            if not CrispConstructions.same(result.crisp_skeleton(), expected):
                return f'{name}: 所属度を忘れた形が単純グラフの構成と一致しません'

        return None

    def _disjoint(self, graph: IVFuzzyGraph) -> IVFuzzyGraph:
        return graph.relabel({
            vertex: f'{vertex}{self._join_suffix}' for vertex in graph.vertices
        })


class DecompositionCheck(PropertyCheck):
    """
    頂点集合が素な二つの組み合わせの分解の確認

    組み合わせた文書が検証を通ることと、各成分に制限した文書が検証を通ることが
    同値であり、さらに入力が検証を通ることとも同値であることを確かめる

    Attributes
    ----------
    _operator : GraphOperator
        入力を検証しない演算機
    """

    def __init__(self, operator: GraphOperator):
        super().__init__()

        self._operator = operator

    @abstractmethod
    def _combine(self, g1: IVFuzzyGraph, g2: IVFuzzyGraph) -> IVFuzzyGraph:
        pass

    def failure(self, graphs: Sequence[IVFuzzyGraph]) -> str | None:
        g1, g2 = graphs
        combined = self._combine(g1, g2)

        combined_valid = _validates(combined)
        parts_valid = all(
            _validates(combined.restrict(part.vertices)) for part in (g1, g2)
        )
        inputs_valid = _validates(g1) and _validates(g2)

        if combined_valid != parts_valid:
            return f'全体の検証 {combined_valid} と成分の検証 {parts_valid} が一致しません'

        if combined_valid != inputs_valid:
            return f'全体の検証 {combined_valid} と入力の検証 {inputs_valid} が一致しません'

        return None


class UnionDecompositionCheck(DecompositionCheck):
    _name: str = 'union-decomposition'

    def _combine(self, g1: IVFuzzyGraph, g2: IVFuzzyGraph) -> IVFuzzyGraph:
        return self._operator.union(g1, g2)


class JoinDecompositionCheck(DecompositionCheck):
    _name: str = 'join-decomposition'

    def _combine(self, g1: IVFuzzyGraph, g2: IVFuzzyGraph) -> IVFuzzyGraph:
        return self._operator.join(g1, g2)


class IsomorphismEquivalenceCheck(PropertyCheck):
    """
    同型が同値関係であることの確認

    三つのグラフは互いに同型であることが分かっている付け替えで、
    見つけた写像から反射律、対称律、推移律を確かめる
    """

    _name: str = 'isomorphism-equivalence'

    def __init__(self, finder: MorphismFinder):
        super().__init__()

        self._finder = finder

    def failure(self, graphs: Sequence[IVFuzzyGraph]) -> str | None:
        g1, g2, g3 = graphs
        iso = MorphismKind.ISOMORPHISM

        if not MorphismChecker.check(g1, g1, VertexMapping.identity(g1.vertices), iso):
            return '恒等写像が同型写像ではありません'

        f12 = self._finder.find(g1, g2, iso)
        f23 = self._finder.find(g2, g3, iso)

        if f12 is None or f23 is None:
            return '付け替えたグラフへの同型写像が見つかりません'

        if not MorphismChecker.check(g2, g1, f12.inverse(), iso):
            return f'逆写像が同型写像ではありません: {f12.inverse()}'

        composed = f12.then(f23)

        if not MorphismChecker.check(g1, g3, composed, iso):
            return f'合成写像が同型写像ではありません: {composed}'

        return None


class ReflexivityCheck(PropertyCheck):
    """
    グラフから自身への写像が見つかることの確認
    """

    _name: str = 'reflexivity'

    def __init__(self, finder: MorphismFinder, kind: MorphismKind):
        super().__init__()

        self._finder = finder
        self._kind = kind

    @property
    def name(self) -> str:
        return f'{self._name}[{self._kind.value}]'

    def failure(self, graphs: Sequence[IVFuzzyGraph]) -> str | None:
        (graph,) = graphs

        if self._finder.find(graph, graph, self._kind) is None:
            return f'自身への{self._kind.value}が見つかりません'

        return None


class MutualWeakOrderCheck(PropertyCheck):
    """
    弱同型の反対称性の確認

    G1からG2とG2からG1の両方に写像があるのに同型でない組を反例とする
    見つけた写像はMorphismCheckerで確かめ直し、
    満たさなければWitnessVerificationErrorを送出する
    """

    _name: str = 'mutual-weak-order'

    def __init__(self, finder: MorphismFinder, kind: MorphismKind):
        super().__init__()

        self._finder = finder
        self._kind = kind

    @property
    def name(self) -> str:
        return f'{self._name}[{self._kind.value}]'

    def failure(self, graphs: Sequence[IVFuzzyGraph]) -> str | None:
        g1, g2 = graphs
        forward = self._finder.find(g1, g2, self._kind)

        if forward is None:
            return None

        backward = self._finder.find(g2, g1, self._kind)

        if backward is None:
            return None

        for source, target, mapping in ((g1, g2, forward), (g2, g1, backward)):
            if not MorphismChecker.check(source, target, mapping, self._kind):
                raise WitnessVerificationError(
                    f'見つけた{self._kind.value}が条件を満たしません: {mapping}'
                )

        if self._finder.find(g1, g2, MorphismKind.ISOMORPHISM) is not None:
            return None

        return (
            f'互いに{self._kind.value}があるが同型ではありません '
            f'(f: {forward}, g: {backward})'
        )


class CompositionCompleteCheck(PropertyCheck):
    """
    完全グラフ自身との合成が完全グラフになることの確認
    """

    _name: str = 'composition-complete'

    def __init__(self, operator: GraphOperator):
        super().__init__()

        self._operator = operator

    def applies(self, graphs: Sequence[IVFuzzyGraph]) -> bool:
        return CompleteGraphAnalyzer.is_complete(graphs[0])

    def failure(self, graphs: Sequence[IVFuzzyGraph]) -> str | None:
        (graph,) = graphs
        composed = self._operator.composition(graph, graph)

        if not CompleteGraphAnalyzer.is_complete(composed):
            return 'G[G]が完全グラフではありません'

        return None


class SaturatedSelfComplementCheck(PropertyCheck):
    """
    全ての組が端点の最小値を持つグラフが自己補対であることの確認
    """

    _name: str = 'saturated-self-complementary'

    def applies(self, graphs: Sequence[IVFuzzyGraph]) -> bool:
        return CompleteGraphAnalyzer.is_saturated(graphs[0])

    def failure(self, graphs: Sequence[IVFuzzyGraph]) -> str | None:
        if not CompleteGraphAnalyzer.check_saturated_self_complementary(graphs[0]):
            return '補グラフの補グラフが元のグラフと一致しません'

        return None


class ComplementIsomorphismCheck(PropertyCheck):
    """
    完全グラフの同型と補グラフの同型が同値であることの確認
    """

    _name: str = 'complement-isomorphism'

    def __init__(self, finder: MorphismFinder):
        super().__init__()

        self._finder = finder

    def applies(self, graphs: Sequence[IVFuzzyGraph]) -> bool:
        return all(CompleteGraphAnalyzer.is_complete(graph) for graph in graphs)

    def failure(self, graphs: Sequence[IVFuzzyGraph]) -> str | None:
        g1, g2 = graphs
        iso = MorphismKind.ISOMORPHISM

        isomorphic = self._finder.find(g1, g2, iso) is not None
        complements_isomorphic = self._finder.find(
            CompleteGraphAnalyzer.complement(g1),
            CompleteGraphAnalyzer.complement(g2),
            iso
        ) is not None

        if isomorphic != complements_isomorphic:
            return f'同型 {isomorphic} と補グラフの同型 {complements_isomorphic} が一致しません'

        return None


class LiteralSumIdentityCheck(PropertyCheck):
    """
    補グラフの補グラフが元に戻るグラフで、辺の総和と端点の最小値の総和が
    一致することの確認
    """

    _name: str = 'literal-sum-identity'

    def applies(self, graphs: Sequence[IVFuzzyGraph]) -> bool:
        graph = graphs[0]

        return (
            CompleteGraphAnalyzer.is_complete(graph)
            and CompleteGraphAnalyzer.is_self_complementary(graph)
        )

    def failure(self, graphs: Sequence[IVFuzzyGraph]) -> str | None:
        report = CompleteGraphAnalyzer.sum_identity(graphs[0])

        if report.literal_holds:
            return None

        return _sum_detail(report.to_dict())


class HalvedSumIdentityCheck(PropertyCheck):
    """
    補グラフと同型なグラフで、辺の総和の2倍と端点の最小値の総和が
    一致することの確認
    """

    _name: str = 'halved-sum-identity'

    def __init__(self, finder: MorphismFinder):
        super().__init__()

        self._finder = finder

    def applies(self, graphs: Sequence[IVFuzzyGraph]) -> bool:
        graph = graphs[0]

        return (
            CompleteGraphAnalyzer.is_complete(graph)
            and CompleteGraphAnalyzer.is_strongly_self_complementary(graph, self._finder)
        )

    def failure(self, graphs: Sequence[IVFuzzyGraph]) -> str | None:
        report = CompleteGraphAnalyzer.sum_identity(graphs[0])

        if report.halved_holds:
            return None

        return _sum_detail(report.to_dict())


def _validates(graph: IVFuzzyGraph) -> bool:
    return not GraphValidator.violations(graph.to_document())


def _sum_detail(sums: dict) -> str:
    return (
        f'辺の総和 [{sums["lhs_lo"]}, {sums["lhs_hi"]}]、'
        f'端点の最小値の総和 [{sums["rhs_lo"]}, {sums["rhs_hi"]}]'
    )
