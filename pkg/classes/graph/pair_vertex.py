from collections.abc import Iterable

from classes.errors import SeparatorCollisionError
from constants import DEFAULT_SEPARATOR

VertexId = str


class PairVertexCodec:
    """
    組頂点IDの符号化機

    (x1, x2) を 'x1<区切り文字>x2' で表す

    Attributes
    ----------
    _separator : str
        区切り文字
    """

    def __init__(self, separator: str = DEFAULT_SEPARATOR):
        """
        コンストラクタ

        Parameters
        ----------
        separator : str, optional
            区切り文字, by default DEFAULT_SEPARATOR

        Raises
        ------
        ValueError
            区切り文字が空、または空白を含む場合
        """
        if not separator or any(char.isspace() for char in separator):
            raise ValueError(f'区切り文字が不正です: {separator!r}')

        self._separator = separator

    @property
    def separator(self) -> str:
        return self._separator

    def check(self, vertices: Iterable[VertexId]) -> None:
        """
        区切り文字の衝突の確認

        Parameters
        ----------
        vertices : Iterable[VertexId]
            組の成分になる頂点

        Raises
        ------
        SeparatorCollisionError
            区切り文字を含む頂点がある場合
        """
        collisions = sorted({
            vertex for vertex in vertices if self._separator in vertex
        })

        if collisions:
            raise SeparatorCollisionError(
                f'区切り文字 {self._separator!r} を含む頂点があります: '
                f'{", ".join(collisions)}'
                '(--separatorで別の区切り文字を指定してください)'
            )

    def encode(self, x1: VertexId, x2: VertexId) -> VertexId:
        self.check((x1, x2))

        return f'{x1}{self._separator}{x2}'

    def decode(self, pair: VertexId) -> tuple[VertexId, VertexId]:
        """
        組頂点IDの分解

        Parameters
        ----------
        pair : VertexId
            組頂点ID

        Returns
        -------
        tuple[VertexId, VertexId]
            (x1, x2)

        Raises
        ------
        ValueError
            区切り文字がちょうど一つ含まれていない場合
        """
        parts = pair.split(self._separator)

        if len(parts) != 2:
            raise ValueError(f'組頂点IDではありません: {pair!r}')

        return parts[0], parts[1]
