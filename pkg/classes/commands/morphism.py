import argparse
import logging

from classes.morphism.checker import MorphismChecker
from classes.morphism.finder import MorphismFinder
from classes.morphism.kind import MorphismKind
from classes.morphism.mapping import VertexMapping
from constants import DEFAULT_NODE_BUDGET, EXIT_NEGATIVE, EXIT_OK
from utils.utils import Command, Utils

logger = logging.getLogger(__name__)


class IsoCheckCommand(Command):
    """
    写像の判定と探索

    --mappingを与えた場合はその写像を判定し、満たされない条件を書き出す
    与えない場合は写像を探索し、見つかった写像を"u -> v"の行で書き出す
    """

    _name: str = 'iso-check'
    _help: str = '準同型、弱同型、弱余同型、同型の判定と探索'

    def _add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument('left', help='定義域のグラフ文書')
        parser.add_argument('right', help='終域のグラフ文書')
        parser.add_argument(
            '--kind',
            choices=[kind.value for kind in MorphismKind],
            default=MorphismKind.ISOMORPHISM.value,
            help='写像の種類(既定: iso)'
        )
        parser.add_argument('--mapping', help="'u -> v'の行を並べた写像ファイル")
        parser.add_argument(
            '--budget',
            type=int,
            default=DEFAULT_NODE_BUDGET,
            help=f'探索で試す割り当ての上限(既定: {DEFAULT_NODE_BUDGET})'
        )

    def run(self, args: argparse.Namespace) -> int:
        g1 = Utils.read_graph(args.left)
        g2 = Utils.read_graph(args.right)
        kind = MorphismKind(args.kind)

        if args.mapping is not None:
            mapping = VertexMapping.parse(Utils.read_text(args.mapping))
            failures = MorphismChecker.failures(g1, g2, mapping, kind)

            if failures:
                Utils.write('false\n' + ''.join(f'{line}\n' for line in failures))

                return EXIT_NEGATIVE

            Utils.write('true\n' + mapping.to_text())

            return EXIT_OK

        finder = MorphismFinder(args.budget)
        mapping = finder.find(g1, g2, kind)
        logger.info('割り当て%d回', finder.nodes)

        if mapping is None:
            Utils.write('not found\n')

            return EXIT_NEGATIVE

        Utils.write('found\n' + mapping.to_text())

        return EXIT_OK
