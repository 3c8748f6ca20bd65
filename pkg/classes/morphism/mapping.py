from collections.abc import Iterable, Iterator, Mapping

from classes.errors import MappingParseError

VertexId = str


class VertexMapping(Mapping[VertexId, VertexId]):
    """
    頂点の写像 f: V1 → V2

    Attributes
    ----------
    _pairs : dict[VertexId, VertexId]
        定義域の頂点から像への対応、挿入順を保つ
    """

    _arrow: str = '->'

    def __init__(self, pairs: Mapping[VertexId, VertexId] | Iterable[tuple[VertexId, VertexId]] = ()):
        self._pairs: dict[VertexId, VertexId] = dict(pairs)

    @classmethod
    def identity(cls, vertices: Iterable[VertexId]) -> 'VertexMapping':
        return cls((vertex, vertex) for vertex in vertices)

    @classmethod
    def parse(cls, text: str) -> 'VertexMapping':
        """
        'u -> v'形式の行の解釈

        空行と'#'で始まる行は無視する

        Parameters
        ----------
        text : str
            写像ファイルの内容

        Returns
        -------
        VertexMapping
            写像

        Raises
        ------
        MappingParseError
            形式が不正な場合、または定義域の頂点が重複している場合
        """
        pairs: dict[VertexId, VertexId] = {}

        for number, line in enumerate(text.splitlines(), start=1):
            line = line.strip()

            if not line or line.startswith('#'):
                continue

            parts = [part.strip() for part in line.split(cls._arrow)]

            if len(parts) != 2 or not all(parts):
                raise MappingParseError(f'{number}行目: "u -> v"の形式ではありません: {line!r}')

            source, target = parts

            if source in pairs:
                raise MappingParseError(f'{number}行目: {source!r}が重複しています')

            pairs[source] = target

        return cls(pairs)

    def to_text(self) -> str:
        return ''.join(
            f'{source} {self._arrow} {target}\n' for source, target in self._pairs.items()
        )

    def is_injective(self) -> bool:
        return len(set(self._pairs.values())) == len(self._pairs)

    def inverse(self) -> 'VertexMapping':
        """
        逆写像

        Returns
        -------
        VertexMapping
            像から定義域への写像

        Raises
        ------
        ValueError
            単射でない場合
        """
        if not self.is_injective():
            raise ValueError('単射でない写像の逆写像は作れません')

        return VertexMapping((target, source) for source, target in self._pairs.items())

    def then(self, other: 'VertexMapping') -> 'VertexMapping':
        """
        合成 other ∘ self

        Parameters
        ----------
        other : VertexMapping
            後に適用する写像

        Returns
        -------
        VertexMapping
            x → other(self(x))
        """
        return VertexMapping(
            (source, other[target]) for source, target in self._pairs.items()
        )

    def __getitem__(self, vertex: VertexId) -> VertexId:
        return self._pairs[vertex]

    def __iter__(self) -> Iterator[VertexId]:
        return iter(self._pairs)

    def __len__(self) -> int:
        return len(self._pairs)

    def __repr__(self) -> str:
        body = ', '.join(f'{s}->{t}' for s, t in self._pairs.items())

        return f'VertexMapping({body})'
