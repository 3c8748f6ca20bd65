import argparse
import logging
import sys
from collections.abc import Sequence

from classes.commands.complete import (
    ComplementCommand, IsCompleteCommand, SelfCompCommand, SumIdentityCommand
)
from classes.commands.document import DotCommand, ValidateCommand
from classes.commands.morphism import IsoCheckCommand
from classes.commands.operations import (
    ComposeCommand, JoinCommand, ProductCommand, UnionCommand
)
from classes.commands.oracle import OracleCommand
from classes.errors import (
    BudgetExceededError, FuzzyGraphError, HypothesisNotMetError, NotCompleteError,
    ValidationErrors
)
from constants import EXIT_NEGATIVE, EXIT_RESOURCE, EXIT_USAGE
from utils.utils import Command, Utils

logger = logging.getLogger(__name__)


class _ArgumentParser(argparse.ArgumentParser):
    """
    使い方の誤りを終了コード1で報告するパーサー
    """

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f'{self.prog}: error: {message}\n')


class Cli:
    """
    コマンドラインのコントローラー

    サブコマンドを登録し、例外を終了コードに変換する

    Attributes
    ----------
    _prog : str
        プログラム名
    _commands : tuple[type[Command], ...]
        サブコマンドのクラス
    _negative_errors : tuple[type[Exception], ...]
        判定が否定的であることを表す例外
    """

    _prog: str = 'ivfg'
    _commands: tuple[type[Command], ...] = (
        ValidateCommand,
        ProductCommand,
        ComposeCommand,
        UnionCommand,
        JoinCommand,
        IsoCheckCommand,
        IsCompleteCommand,
        ComplementCommand,
        SelfCompCommand,
        SumIdentityCommand,
        DotCommand,
        OracleCommand,
    )
    _negative_errors: tuple[type[Exception], ...] = (
        ValidationErrors, NotCompleteError, HypothesisNotMetError
    )

    def __init__(self):
        """
        コンストラクタ
        """
        self._parser = _ArgumentParser(
            prog=self._prog, description='区間値ファジーグラフの演算と検証'
        )
        self._parser.add_argument(
            '-v', '--verbose', action='store_true', help='DEBUGログを出す'
        )

        subparsers = self._parser.add_subparsers(dest='subcommand', required=True)

        for command in self._commands:
            command().register(subparsers)

    def run(self, argv: Sequence[str] | None = None) -> int:
        """
        実行

        Parameters
        ----------
        argv : Sequence[str] | None, optional
            引数、Noneならsys.argv[1:], by default None

        Returns
        -------
        int
            終了コード
        """
        args = self._parser.parse_args(argv)

        Utils.setup_logging(args.verbose)
        logger.info('%sを実行します', args.subcommand)

        try:
            return args.command.run(args)

        except BudgetExceededError as e:
            logger.warning('%s', e)

            return EXIT_RESOURCE

        except self._negative_errors as e:
            logger.error('%s', e)

            return EXIT_NEGATIVE

        except (FuzzyGraphError, OSError, ValueError) as e:
            logger.error('%s', e)

            return EXIT_USAGE
