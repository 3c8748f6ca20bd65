import argparse
import json

from classes.graph.complete import CompleteGraphAnalyzer
from classes.morphism.finder import MorphismFinder
from constants import DEFAULT_NODE_BUDGET, EXIT_NEGATIVE, EXIT_OK
from utils.utils import Command, Utils


def _verdict(holds: bool) -> int:
    Utils.write('true\n' if holds else 'false\n')

    return EXIT_OK if holds else EXIT_NEGATIVE


class IsCompleteCommand(Command):
    _name: str = 'is-complete'
    _help: str = '完全グラフか判定する'

    def _add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument('path', help="グラフ文書、'-'で標準入力")

    def run(self, args: argparse.Namespace) -> int:
        return _verdict(CompleteGraphAnalyzer.is_complete(Utils.read_graph(args.path)))


class ComplementCommand(Command):
    _name: str = 'complement'
    _help: str = '完全グラフの補グラフを書き出す'

    def _add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument('path', help="グラフ文書、'-'で標準入力")

    def run(self, args: argparse.Namespace) -> int:
        complement = CompleteGraphAnalyzer.complement(Utils.read_graph(args.path))
        Utils.write(complement.to_document().to_text())

        return EXIT_OK


class SelfCompCommand(Command):
    """
    自己補対性の判定

    weakは補グラフの補グラフが元のグラフと一致するか、
    strongは補グラフと同型かを判定する
    """

    _name: str = 'self-comp'
    _help: str = '自己補対性を判定する'
    _modes: tuple[str, ...] = ('weak', 'strong')

    def _add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument('mode', choices=self._modes)
        parser.add_argument('path', help="グラフ文書、'-'で標準入力")
        parser.add_argument(
            '--budget',
            type=int,
            default=DEFAULT_NODE_BUDGET,
            help=f'strongの探索で試す割り当ての上限(既定: {DEFAULT_NODE_BUDGET})'
        )

    def run(self, args: argparse.Namespace) -> int:
        graph = Utils.read_graph(args.path)

        if args.mode == 'weak':
            return _verdict(CompleteGraphAnalyzer.is_self_complementary(graph))

        return _verdict(CompleteGraphAnalyzer.is_strongly_self_complementary(
            graph, MorphismFinder(args.budget)
        ))


class SumIdentityCommand(Command):
    """
    総和の比較

    二つの比較結果を含むJSONを書き出す。比較の成否は終了コードに反映しない
    """

    _name: str = 'sum-identity'
    _help: str = '辺の所属度の総和と端点の最小値の総和を比べる'

    def _add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument('path', help="グラフ文書、'-'で標準入力")

    def run(self, args: argparse.Namespace) -> int:
        report = CompleteGraphAnalyzer.sum_identity(Utils.read_graph(args.path))
        Utils.write(json.dumps(report.to_dict(), indent=2, ensure_ascii=False) + '\n')

        return EXIT_OK
