import argparse

from classes.document.dot import DotWriter
from classes.graph.fuzzy_graph import GraphValidator
from constants import EXIT_NEGATIVE, EXIT_OK
from utils.utils import Command, Utils


class ValidateCommand(Command):
    """
    文書の検証

    全ての違反を一行ずつ標準出力に書く
    """

    _name: str = 'validate'
    _help: str = '文書が区間値ファジーグラフか検証する'

    def _add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument('path', help="グラフ文書、'-'で標準入力")

    def run(self, args: argparse.Namespace) -> int:
        violations = GraphValidator.violations(Utils.read_document(args.path))

        if not violations:
            Utils.write('valid\n')

            return EXIT_OK

        Utils.write(''.join(f'{violation}\n' for violation in violations))

        return EXIT_NEGATIVE


class DotCommand(Command):
    _name: str = 'dot'
    _help: str = 'DOT形式で書き出す'

    def _add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument('path', help="グラフ文書、'-'で標準入力")

    def run(self, args: argparse.Namespace) -> int:
        Utils.write(DotWriter.to_dot(Utils.read_graph(args.path)))

        return EXIT_OK
