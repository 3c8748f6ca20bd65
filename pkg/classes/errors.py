from dataclasses import dataclass
from enum import Enum


class FuzzyGraphError(Exception):
    """
    区間値ファジーグラフ関連の例外の基底クラス
    """


class DocumentParseError(FuzzyGraphError, ValueError):
    """
    グラフ文書の読み込み失敗

    Attributes
    ----------
    field : str | None
        問題のあったフィールドのパス
    line : int | None
        問題のあった行番号
    """

    def __init__(
            self,
            message: str,
            *,
            field: str | None = None,
            line: int | None = None
    ):
        """
        コンストラクタ

        Parameters
        ----------
        message : str
            メッセージ
        field : str | None, optional
            フィールドのパス, by default None
        line : int | None, optional
            行番号, by default None
        """
        self.field = field
        self.line = line

        context = []

        if line is not None:
            context.append(f'{line}行目')

        if field is not None:
            context.append(f'フィールド {field}')

        if context:
            message = f'{"、".join(context)}: {message}'

        super().__init__(message)


class DocumentSyntaxError(DocumentParseError):
    """
    文書の構文エラー
    """


class UnknownFieldError(DocumentParseError):
    """
    未知のフィールド
    """


class BadNumberError(DocumentParseError):
    """
    有理数として解釈できない値
    """


class MappingParseError(FuzzyGraphError, ValueError):
    """
    写像ファイルの読み込み失敗
    """


class ViolationKind(Enum):
    """
    検証違反の種類
    """

    DUPLICATE_VERTEX = 'DuplicateVertex'
    INVALID_VERTEX_ID = 'InvalidVertexId'
    UNKNOWN_ENDPOINT = 'UnknownEndpoint'
    LOOP_EDGE = 'LoopEdge'
    DUPLICATE_EDGE = 'DuplicateEdge'
    MEMBERSHIP_OUT_OF_RANGE = 'MembershipOutOfRange'
    EDGE_BOUND_VIOLATION = 'EdgeBoundViolation'


@dataclass(frozen=True)
class Violation:
    """
    検証違反一件

    Attributes
    ----------
    kind : ViolationKind
        違反の種類
    subject : str
        違反した頂点または辺
    detail : str
        説明
    side : str | None
        辺の上界違反の場合、'lower'または'upper'
    """

    kind: ViolationKind
    subject: str
    detail: str
    side: str | None = None

    def __str__(self) -> str:
        side = f'({self.side})' if self.side else ''

        return f'{self.kind.value}{side} {self.subject}: {self.detail}'


class ValidationErrors(FuzzyGraphError, ValueError):
    """
    検証違反の一覧

    Attributes
    ----------
    violations : list[Violation]
        全ての違反
    """

    def __init__(self, violations: list[Violation]):
        """
        コンストラクタ

        Parameters
        ----------
        violations : list[Violation]
            全ての違反
        """
        self.violations = list(violations)

        lines = '\n'.join(f'  {violation}' for violation in self.violations)

        super().__init__(
            f'区間値ファジーグラフではありません({len(self.violations)}件)\n{lines}'
        )

    def kinds(self) -> set[ViolationKind]:
        return {violation.kind for violation in self.violations}


class IntervalRangeError(FuzzyGraphError, ValueError):
    """
    0 <= lo <= hi <= 1 を満たさない区間数
    """


class UnknownVertexError(FuzzyGraphError, LookupError):
    """
    グラフに存在しない頂点
    """


class LoopQueryError(FuzzyGraphError, ValueError):
    """
    同一頂点の組に対する問い合わせ
    """


class SeparatorCollisionError(FuzzyGraphError, ValueError):
    """
    頂点IDに組頂点の区切り文字が含まれている
    """


class NonDisjointVertexSetsError(FuzzyGraphError, ValueError):
    """
    結合の頂点集合が素ではない
    """


class PartialMappingError(FuzzyGraphError, ValueError):
    """
    写像が定義域全体で定義されていない
    """


class NotBijectiveError(FuzzyGraphError, ValueError):
    """
    全単射が必要な種類に対して全単射でない写像
    """


class BudgetExceededError(FuzzyGraphError, RuntimeError):
    """
    探索の予算超過
    """


class NotCompleteError(FuzzyGraphError, ValueError):
    """
    完全ではないグラフ
    """


class HypothesisNotMetError(FuzzyGraphError, ValueError):
    """
    全ての頂点の組で辺の所属度がrminに等しいという仮定を満たさない
    """


class WitnessVerificationError(FuzzyGraphError, RuntimeError):
    """
    探索で見つけた写像が条件を満たさない
    """
