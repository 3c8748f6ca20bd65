import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from classes.document.graph_document import GraphDocument


class Verdict(Enum):
    ALL_PASSED = 'AllPassed'
    COUNTEREXAMPLE_FOUND = 'CounterexampleFound'
    INCONCLUSIVE = 'Inconclusive'


@dataclass(frozen=True)
class Failure:
    """
    性質が成り立たなかった事例

    Attributes
    ----------
    check : str
        失敗した確認の名前、再実行に使う
    seed : int | None
        試行のシード、固定の事例や列挙ではNone
    documents : tuple[GraphDocument, ...]
        入力のグラフ文書
    detail : str
        成り立たなかった内容
    """

    check: str
    seed: int | None
    documents: tuple[GraphDocument, ...]
    detail: str

    def to_dict(self) -> dict[str, Any]:
        return {
            'check': self.check,
            'seed': self.seed,
            'documents': [document.to_dict() for document in self.documents],
            'detail': self.detail,
        }


@dataclass
class OracleReport:
    """
    掃引の結果

    Attributes
    ----------
    property_name : str
        確認した性質の名前
    instances_checked : int
        確認した事例の数
    failures : list[Failure]
        成り立たなかった事例
    caveat : str | None
        結果の読み方の注意
    expected_verdict : Verdict
        期待される判定、反例が知られている性質ではCounterexampleFound
    """

    property_name: str
    instances_checked: int = 0
    failures: list[Failure] = field(default_factory=list)
    caveat: str | None = None
    expected_verdict: Verdict = Verdict.ALL_PASSED

    @property
    def verdict(self) -> Verdict:
        if self.failures:
            return Verdict.COUNTEREXAMPLE_FOUND

        if self.instances_checked == 0:
            return Verdict.INCONCLUSIVE

        return Verdict.ALL_PASSED

    @property
    def as_expected(self) -> bool:
        return self.verdict is self.expected_verdict

    def summary(self) -> str:
        """
        一行の要約

        Returns
        -------
        str
            性質名、判定、事例数、反例数
        """
        line = (
            f'{self.property_name}: {self.verdict.value} '
            f'({self.instances_checked}件中 反例{len(self.failures)}件)'
        )

        if not self.as_expected:
            line += f' 期待: {self.expected_verdict.value}'

        if self.caveat:
            line += f' [{self.caveat}]'

        return line

    def to_dict(self) -> dict[str, Any]:
        return {
            'property_name': self.property_name,
            'instances_checked': self.instances_checked,
            'verdict': self.verdict.value,
            'expected_verdict': self.expected_verdict.value,
            'caveat': self.caveat,
            'failures': [failure.to_dict() for failure in self.failures],
        }

    def to_text(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + '\n'
