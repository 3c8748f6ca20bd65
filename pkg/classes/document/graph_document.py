import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

from classes.errors import BadNumberError, DocumentSyntaxError, UnknownFieldError
from classes.interval import Interval
from constants import DOCUMENT_VERSION

RawInterval = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class VertexEntry:
    id: str
    mu: RawInterval


@dataclass(frozen=True)
class EdgeEntry:
    u: str
    v: str
    mu: RawInterval


@dataclass(frozen=True)
class GraphDocument:
    """
    グラフ文書

    JSONで表現された区間値ファジーグラフの未検証の内容
    所属度は有理数に変換済みだが、範囲や辺の上界は検証していない

    Attributes
    ----------
    version : int
        文書形式のバージョン
    vertices : tuple[VertexEntry, ...]
        頂点の記述、入力順
    edges : tuple[EdgeEntry, ...]
        辺の記述、入力順
    """

    version: int
    vertices: tuple[VertexEntry, ...]
    edges: tuple[EdgeEntry, ...]

    _fields = ('version', 'vertices', 'edges')
    _vertex_fields = ('id', 'mu')
    _edge_fields = ('u', 'v', 'mu')

    @classmethod
    def parse(cls, text: str) -> 'GraphDocument':
        """
        文書テキストの解釈

        Parameters
        ----------
        text : str
            UTF-8のJSONテキスト

        Returns
        -------
        GraphDocument
            文書

        Raises
        ------
        DocumentSyntaxError
            JSONとして不正な場合、または型が違う場合
        UnknownFieldError
            未知のフィールドがある場合
        BadNumberError
            所属度が有理数として解釈できない場合
        """
        try:
            data = json.loads(text)

        except json.JSONDecodeError as e:
            raise DocumentSyntaxError(e.msg, line=e.lineno) from e

        return cls.from_dict(data)

    @classmethod
    def load(cls, path: Path) -> 'GraphDocument':
        return cls.parse(path.read_text(encoding='utf-8'))

    @classmethod
    def from_dict(cls, data: Any) -> 'GraphDocument':
        """
        JSONオブジェクトからの作成

        Parameters
        ----------
        data : Any
            json.loads()の結果

        Returns
        -------
        GraphDocument
            文書
        """
        cls._check_object(data, cls._fields, '$')

        version = data['version']

        if version != DOCUMENT_VERSION or isinstance(version, bool):
            raise DocumentSyntaxError(
                f'対応していないバージョンです: {version!r}', field='$.version'
            )

        vertices = tuple(
            VertexEntry(
                cls._read_text(item, 'id', f'$.vertices[{i}]'),
                cls._read_interval(item['mu'], f'$.vertices[{i}].mu')
            )
            for i, item in cls._read_list(data, 'vertices', cls._vertex_fields)
        )
        edges = tuple(
            EdgeEntry(
                cls._read_text(item, 'u', f'$.edges[{i}]'),
                cls._read_text(item, 'v', f'$.edges[{i}]'),
                cls._read_interval(item['mu'], f'$.edges[{i}].mu')
            )
            for i, item in cls._read_list(data, 'edges', cls._edge_fields)
        )

        return cls(version, vertices, edges)

    @classmethod
    def _read_list(
            cls, data: dict, key: str, fields: tuple[str, ...]
    ) -> list[tuple[int, dict]]:
        items = data[key]

        if not isinstance(items, list):
            raise DocumentSyntaxError('配列ではありません', field=f'$.{key}')

        for i, item in enumerate(items):
            cls._check_object(item, fields, f'$.{key}[{i}]')

        return list(enumerate(items))

    @staticmethod
    def _check_object(data: Any, fields: tuple[str, ...], path: str) -> None:
        """
        オブジェクトのフィールドの確認

        Parameters
        ----------
        data : Any
            確認対象
        fields : tuple[str, ...]
            必須かつ許可されたフィールド
        path : str
            確認対象のパス

        Raises
        ------
        DocumentSyntaxError
            オブジェクトでない場合、または必須フィールドが欠けている場合
        UnknownFieldError
            未知のフィールドがある場合
        """
        if not isinstance(data, dict):
            raise DocumentSyntaxError('オブジェクトではありません', field=path)

        for key in data:
            if key not in fields:
                raise UnknownFieldError(
                    f'未知のフィールドです: {key!r}', field=f'{path}.{key}'
                )

        for key in fields:
            if key not in data:
                raise DocumentSyntaxError(
                    f'フィールドがありません: {key!r}', field=path
                )

    @staticmethod
    def _read_text(item: dict, key: str, path: str) -> str:
        value = item[key]

        if not isinstance(value, str):
            raise DocumentSyntaxError('文字列ではありません', field=f'{path}.{key}')

        return value

    @staticmethod
    def _read_interval(value: Any, path: str) -> RawInterval:
        """
        所属度の読み込み

        Parameters
        ----------
        value : Any
            ["lo", "hi"]のはず
        path : str
            値のパス

        Returns
        -------
        RawInterval
            範囲未検証の有理数の組

        Raises
        ------
        DocumentSyntaxError
            要素数2の配列でない場合
        BadNumberError
            文字列でない場合、または有理数として解釈できない場合
        """
        if not isinstance(value, list) or len(value) != 2:
            raise DocumentSyntaxError('要素数2の配列ではありません', field=path)

        bounds = []

        for i, text in enumerate(value):
            if not isinstance(text, str):
                raise BadNumberError(
                    f'所属度は文字列で記述してください: {text!r}', field=f'{path}[{i}]'
                )

            try:
                bounds.append(Interval.parse_bound(text))

            except BadNumberError as e:
                raise BadNumberError(str(e), field=f'{path}[{i}]') from e

        return bounds[0], bounds[1]

    def to_dict(self) -> dict[str, Any]:
        return {
            'version': self.version,
            'vertices': [
                {'id': entry.id, 'mu': self._format(entry.mu)}
                for entry in self.vertices
            ],
            'edges': [
                {'u': entry.u, 'v': entry.v, 'mu': self._format(entry.mu)}
                for entry in self.edges
            ]
        }

    def to_text(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + '\n'

    @staticmethod
    def _format(mu: RawInterval) -> list[str]:
        return [Interval.format_bound(bound) for bound in mu]

