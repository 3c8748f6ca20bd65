from collections.abc import Hashable, Iterable, Iterator, Mapping
from typing import Generic, TypeVar

from classes.interval import Interval, ZERO

K = TypeVar('K', bound=Hashable)


class IVFuzzySet(Generic[K]):
    """
    区間値ファジー集合

    要素から区間数への写像
    定義されていない要素の所属度は[0, 0]とみなす
    挿入順は保持され、反復や直列化の順序に使われる

    Attributes
    ----------
    _entries : dict[K, Interval]
        要素と所属度
    """

    def __init__(self, entries: Mapping[K, Interval] | Iterable[tuple[K, Interval]] = ()):
        """
        コンストラクタ

        Parameters
        ----------
        entries : Mapping[K, Interval] | Iterable[tuple[K, Interval]], optional
            要素と所属度, by default ()
        """
        self._entries: dict[K, Interval] = dict(entries)

    def membership(self, key: K) -> Interval:
        return self._entries.get(key, ZERO)

    def union(self, other: 'IVFuzzySet[K]') -> 'IVFuzzySet[K]':
        """
        和集合

        片方にだけある要素はその所属度をそのまま、
        両方にある要素は成分ごとの最大値を取る

        Parameters
        ----------
        other : IVFuzzySet[K]
            もう一方の集合

        Returns
        -------
        IVFuzzySet[K]
            和集合、要素の順序はselfの順にotherだけの要素が続く
        """
        entries = dict(self._entries)

        for key, mu in other.items():
            entries[key] = entries[key].rmax(mu) if key in entries else mu

        return IVFuzzySet(entries)

    def intersection(self, other: 'IVFuzzySet[K]') -> 'IVFuzzySet[K]':
        """
        共通部分

        片方にしかない要素は相手側が[0, 0]なので含めない

        Parameters
        ----------
        other : IVFuzzySet[K]
            もう一方の集合

        Returns
        -------
        IVFuzzySet[K]
            両方にある要素の成分ごとの最小値
        """
        return IVFuzzySet(
            (key, mu.rmin(other[key]))
            for key, mu in self._entries.items() if key in other
        )

    def restrict(self, keys: Iterable[K]) -> 'IVFuzzySet[K]':
        keys = set(keys)

        return IVFuzzySet(
            (key, mu) for key, mu in self._entries.items() if key in keys
        )

    def items(self) -> Iterator[tuple[K, Interval]]:
        return iter(self._entries.items())

    def keys(self) -> Iterator[K]:
        return iter(self._entries)

    def __getitem__(self, key: K) -> Interval:
        return self._entries[key]

    def __contains__(self, key: object) -> bool:
        return key in self._entries

    def __iter__(self) -> Iterator[K]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IVFuzzySet):
            return NotImplemented

        return self._entries == other._entries

    def __repr__(self) -> str:
        body = ', '.join(f'{key!r}: {mu}' for key, mu in self._entries.items())

        return f'IVFuzzySet({{{body}}})'
