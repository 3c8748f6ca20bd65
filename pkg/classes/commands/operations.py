import argparse
from abc import abstractmethod

from classes.graph.fuzzy_graph import IVFuzzyGraph
from classes.graph.operations import GraphOperator
from constants import DEFAULT_SEPARATOR, EXIT_OK
from utils.utils import Command, Utils


class BinaryOperationCommand(Command):
    """
    二つの文書を組み合わせて結果の文書を書き出すサブコマンド
    """

    def _add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument('left', help='左のグラフ文書')
        parser.add_argument('right', help='右のグラフ文書')
        parser.add_argument(
            '--separator',
            default=DEFAULT_SEPARATOR,
            help=f'組頂点IDの区切り文字(既定: {DEFAULT_SEPARATOR!r})'
        )

    def run(self, args: argparse.Namespace) -> int:
        operator = GraphOperator(args.separator)
        result = self._apply(
            operator, Utils.read_graph(args.left), Utils.read_graph(args.right)
        )
        Utils.write(result.to_document().to_text())

        return EXIT_OK

    @abstractmethod
    def _apply(
            self, operator: GraphOperator, g1: IVFuzzyGraph, g2: IVFuzzyGraph
    ) -> IVFuzzyGraph:
        pass


class ProductCommand(BinaryOperationCommand):
    _name: str = 'product'
    _help: str = '直積 G1 × G2'

    def _apply(self, operator, g1, g2):
        return operator.cartesian_product(g1, g2)


class ComposeCommand(BinaryOperationCommand):
    _name: str = 'compose'
    _help: str = '合成 G1[G2]'

    def _apply(self, operator, g1, g2):
        return operator.composition(g1, g2)


class UnionCommand(BinaryOperationCommand):
    _name: str = 'union'
    _help: str = '和 G1 ∪ G2'

    def _apply(self, operator, g1, g2):
        return operator.union(g1, g2)


class JoinCommand(BinaryOperationCommand):
    _name: str = 'join'
    _help: str = '結合 G1 + G2(頂点集合は素)'

    def _apply(self, operator, g1, g2):
        return operator.join(g1, g2)
