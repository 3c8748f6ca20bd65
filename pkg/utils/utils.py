import argparse
import logging
import sys
from abc import ABC, abstractmethod
from pathlib import Path

from classes.document.graph_document import GraphDocument
from classes.graph.fuzzy_graph import GraphValidator, IVFuzzyGraph

_STDIN = '-'


class Command(ABC):
    """
    サブコマンド基底抽象クラス

    Attributes
    ----------
    _name : str
        サブコマンド名
    _help : str
        ヘルプの説明
    """

    _name: str = None
    _help: str = ''

    def __init__(self):
        """
        コンストラクタ
        """
        self._check_name()

    @classmethod
    def _check_name(cls) -> None:
        """
        サブコマンド名の確認

        Raises
        ------
        TypeError
            サブコマンド名がstrではない場合
        """
        if not isinstance(cls._name, str):
            raise TypeError(
                f'{cls.__name__}._nameをstrで再定義してください'
            )

    def register(self, subparsers: argparse._SubParsersAction) -> None:
        """
        サブコマンドの登録

        Parameters
        ----------
        subparsers : argparse._SubParsersAction
            親パーサーのサブパーサー
        """
        parser = subparsers.add_parser(self._name, help=self._help)
        self._add_arguments(parser)
        parser.set_defaults(command=self)

    @abstractmethod
    def _add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """
        引数の追加

        Parameters
        ----------
        parser : argparse.ArgumentParser
            サブコマンドのパーサー
        """
        pass

    @abstractmethod
    def run(self, args: argparse.Namespace) -> int:
        """
        実行

        Parameters
        ----------
        args : argparse.Namespace
            解析済みの引数

        Returns
        -------
        int
            終了コード
        """
        pass


class Utils:
    """
    ユーティリティクラス
    """

    _log_format: str = '%(levelname)s %(name)s: %(message)s'

    @staticmethod
    def setup_logging(verbose: bool = False) -> None:
        """
        ログの設定

        ログは標準エラー出力に書き、標準出力はコマンドの結果だけにする

        Parameters
        ----------
        verbose : bool, optional
            TrueならDEBUG、FalseならWARNING以上を出す, by default False
        """
        logging.basicConfig(
            level=logging.DEBUG if verbose else logging.WARNING,
            format=Utils._log_format,
            stream=sys.stderr,
            force=True
        )

    @staticmethod
    def read_text(path: str) -> str:
        """
        テキストの読み込み

        Parameters
        ----------
        path : str
            ファイルのパス、'-'なら標準入力

        Returns
        -------
        str
            内容

        Raises
        ------
        OSError
            ファイルが読めない場合
        """
        if path == _STDIN:
            return sys.stdin.read()

        return Path(path).read_text(encoding='utf-8')

    @staticmethod
    def read_document(path: str) -> GraphDocument:
        return GraphDocument.parse(Utils.read_text(path))

    @staticmethod
    def read_graph(path: str) -> IVFuzzyGraph:
        """
        検証済みのグラフの読み込み

        Parameters
        ----------
        path : str
            文書のパス、'-'なら標準入力

        Returns
        -------
        IVFuzzyGraph
            グラフ

        Raises
        ------
        DocumentParseError
            文書として解釈できない場合
        ValidationErrors
            区間値ファジーグラフでない場合
        """
        return GraphValidator.validate(Utils.read_document(path))

    @staticmethod
    def write(text: str) -> None:
        sys.stdout.write(text)
