import re
from fractions import Fraction

from classes.errors import BadNumberError, IntervalRangeError

Rational = Fraction
Bound = Fraction | int | str

_DECIMAL = re.compile(r'-?[0-9]+(\.[0-9]+)?')
_RATIO = re.compile(r'-?[0-9]+/[0-9]+')


class Interval:
    """
    区間数 [lo, hi]

    0 <= lo <= hi <= 1 を満たす有理数の組
    値は既約分数で保持され、等値比較は構造的に行われる

    Attributes
    ----------
    _lo : Fraction
        下界
    _hi : Fraction
        上界
    """

    __slots__ = ('_lo', '_hi')

    def __init__(self, lo: Bound, hi: Bound):
        """
        コンストラクタ

        Parameters
        ----------
        lo : Bound
            下界
        hi : Bound
            上界

        Raises
        ------
        IntervalRangeError
            0 <= lo <= hi <= 1 を満たさない場合
        """
        lo = Interval.to_rational(lo)
        hi = Interval.to_rational(hi)

        if not 0 <= lo <= hi <= 1:
            raise IntervalRangeError(
                f'区間数は0 <= lo <= hi <= 1を満たす必要があります: [{lo}, {hi}]'
            )

        self._lo = lo
        self._hi = hi

    @property
    def lo(self) -> Fraction:
        return self._lo

    @property
    def hi(self) -> Fraction:
        return self._hi

    @staticmethod
    def to_rational(value: Bound) -> Fraction:
        """
        有理数への変換

        Parameters
        ----------
        value : Bound
            Fraction、int、または十進数か'p/q'の文字列

        Returns
        -------
        Fraction
            既約分数

        Raises
        ------
        BadNumberError
            有理数として解釈できない場合
        """
        if isinstance(value, bool):
            raise BadNumberError(f'有理数ではありません: {value!r}')

        if isinstance(value, (Fraction, int)):
            return Fraction(value)

        if isinstance(value, str):
            return Interval.parse_bound(value)

        raise BadNumberError(f'有理数ではありません: {value!r}')

    @staticmethod
    def parse_bound(text: str) -> Fraction:
        """
        境界値の文字列の解釈

        '0.2'のような十進数と'1/3'のような分数を受け付ける
        範囲外の値はここでは拒否せず、検証に任せる

        Parameters
        ----------
        text : str
            境界値の文字列

        Returns
        -------
        Fraction
            既約分数

        Raises
        ------
        BadNumberError
            十進数でも分数でもない場合、または分母が0の場合
        """
        if _DECIMAL.fullmatch(text):
            return Fraction(text)

        if _RATIO.fullmatch(text):
            _, denominator = text.split('/')

            if int(denominator) == 0:
                raise BadNumberError(f'分母が0です: {text!r}')

            return Fraction(text)

        raise BadNumberError(f'十進数または p/q 形式ではありません: {text!r}')

    @staticmethod
    def format_bound(value: Fraction) -> str:
        """
        境界値の文字列化

        分母が2と5だけを素因数に持つ場合は有限小数、それ以外は'p/q'にする

        Parameters
        ----------
        value : Fraction
            境界値

        Returns
        -------
        str
            '0.2'、'1'、'1/3'など
        """
        denominator = value.denominator
        twos = fives = 0

        while denominator % 2 == 0:
            denominator //= 2
            twos += 1

        while denominator % 5 == 0:
            denominator //= 5
            fives += 1

        if denominator != 1:
            return f'{value.numerator}/{value.denominator}'

        digits = max(twos, fives)

        if digits == 0:
            return str(value.numerator)

        scaled = value * 10 ** digits
        sign = '-' if scaled < 0 else ''
        whole, frac = divmod(abs(scaled.numerator), 10 ** digits)
        frac_text = str(frac).rjust(digits, '0').rstrip('0')

        return f'{sign}{whole}.{frac_text}'

    @classmethod
    def parse(cls, pair: tuple[str, str] | list[str]) -> 'Interval':
        """
        文字列二つからの区間数の作成

        Parameters
        ----------
        pair : tuple[str, str] | list[str]
            下界と上界の文字列

        Returns
        -------
        Interval
            区間数
        """
        lo, hi = pair

        return cls(cls.parse_bound(lo), cls.parse_bound(hi))

    @classmethod
    def point(cls, value: Bound) -> 'Interval':
        """
        退化区間 [a, a]

        Parameters
        ----------
        value : Bound
            a

        Returns
        -------
        Interval
            [a, a]
        """
        return cls(value, value)

    def to_strings(self) -> list[str]:
        return [Interval.format_bound(self._lo), Interval.format_bound(self._hi)]

    def rmin(self, other: 'Interval') -> 'Interval':
        """
        成分ごとの最小値(束の交わり)

        Parameters
        ----------
        other : Interval
            もう一方の区間数

        Returns
        -------
        Interval
            [min(lo1, lo2), min(hi1, hi2)]
        """
        return Interval(min(self._lo, other._lo), min(self._hi, other._hi))

    def rmax(self, other: 'Interval') -> 'Interval':
        """
        成分ごとの最大値(束の結び)

        Parameters
        ----------
        other : Interval
            もう一方の区間数

        Returns
        -------
        Interval
            [max(lo1, lo2), max(hi1, hi2)]
        """
        return Interval(max(self._lo, other._lo), max(self._hi, other._hi))

    def prob_sum(self, other: 'Interval') -> 'Interval':
        """
        確率和

        Parameters
        ----------
        other : Interval
            もう一方の区間数

        Returns
        -------
        Interval
            [lo1 + lo2 - lo1 * lo2, hi1 + hi2 - hi1 * hi2]
        """
        lo = self._lo + other._lo - self._lo * other._lo
        hi = self._hi + other._hi - self._hi * other._hi

        return Interval(lo, hi)

    def scale(self, k: Bound) -> 'Interval':
        """
        スカラー倍

        Parameters
        ----------
        k : Bound
            0 <= k <= 1 のスカラー

        Returns
        -------
        Interval
            [k * lo, k * hi]

        Raises
        ------
        IntervalRangeError
            kが[0, 1]の範囲外の場合
        """
        k = Interval.to_rational(k)

        if not 0 <= k <= 1:
            raise IntervalRangeError(f'スカラーは[0, 1]の範囲で指定してください: {k}')

        return Interval(k * self._lo, k * self._hi)

    def leq(self, other: 'Interval') -> bool:
        """
        半順序 <=

        比較できない組では、どちら向きでもFalseになる

        Parameters
        ----------
        other : Interval
            比較対象

        Returns
        -------
        bool
            lo1 <= lo2 かつ hi1 <= hi2 の場合True
        """
        return self._lo <= other._lo and self._hi <= other._hi

    def lt(self, other: 'Interval') -> bool:
        return self.leq(other) and self != other

    def eq(self, other: 'Interval') -> bool:
        return self._lo == other._lo and self._hi == other._hi

    def is_zero(self) -> bool:
        return self._hi == 0

    def sort_key(self) -> tuple[Fraction, Fraction]:
        """
        決定的な並び替え用のキー

        辞書式の全順序であり、区間数の半順序とは別物

        Returns
        -------
        tuple[Fraction, Fraction]
            (lo, hi)
        """
        return (self._lo, self._hi)

    def __le__(self, other: 'Interval') -> bool:
        if not isinstance(other, Interval):
            return NotImplemented

        return self.leq(other)

    def __lt__(self, other: 'Interval') -> bool:
        if not isinstance(other, Interval):
            return NotImplemented

        return self.lt(other)

    def __ge__(self, other: 'Interval') -> bool:
        if not isinstance(other, Interval):
            return NotImplemented

        return other.leq(self)

    def __gt__(self, other: 'Interval') -> bool:
        if not isinstance(other, Interval):
            return NotImplemented

        return other.lt(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Interval):
            return NotImplemented

        return self.eq(other)

    def __hash__(self) -> int:
        return hash((self._lo, self._hi))

    def __add__(self, other: 'Interval') -> 'Interval':
        if not isinstance(other, Interval):
            return NotImplemented

        return self.prob_sum(other)

    def __rmul__(self, k: Bound) -> 'Interval':
        return self.scale(k)

    def __repr__(self) -> str:
        return f'Interval({self})'

    def __str__(self) -> str:
        lo, hi = self.to_strings()

        return f'[{lo},{hi}]'


ZERO = Interval(0, 0)
ONE = Interval(1, 1)
