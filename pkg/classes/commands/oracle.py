import argparse
import json
from fractions import Fraction

from classes.morphism.kind import MorphismKind
from classes.oracle.oracle import Oracle
from classes.oracle.params import GenParams
from classes.oracle.report import OracleReport, Verdict
from constants import (
    DEFAULT_NODE_BUDGET, DEFAULT_ORACLE_BUDGET, DEFAULT_SEPARATOR, EXIT_NEGATIVE, EXIT_OK,
    EXIT_RESOURCE
)
from utils.utils import Command, Utils


class OracleCommand(Command):
    """
    性質の掃引

    全ての結果をJSONの配列で書き出す
    期待どおりでない結果があれば、反例なら2、事例がなければ3で終了する
    """

    _name: str = 'oracle'
    _help: str = '小さな事例で性質を掃引する'
    _suites: tuple[str, ...] = (
        'closure', 'decomposition', 'equivalence', 'order-problem', 'complete'
    )
    _order_kinds: tuple[str, ...] = (
        MorphismKind.WEAK_ISOMORPHISM.value, MorphismKind.WEAK_CO_ISOMORPHISM.value
    )

    def _add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument('--suite', choices=self._suites, required=True)
        parser.add_argument('--seed', type=int, default=0)
        parser.add_argument('--trials', type=int, default=100)
        parser.add_argument('--max-vertices', type=int, default=4)
        parser.add_argument('--grid', type=int, default=10)
        parser.add_argument('--edge-probability', type=Fraction, default=Fraction(1, 2))
        parser.add_argument(
            '--separator',
            default=DEFAULT_SEPARATOR,
            help=f'組頂点IDの区切り文字(既定: {DEFAULT_SEPARATOR!r})'
        )
        parser.add_argument(
            '--kind',
            choices=self._order_kinds,
            default=MorphismKind.WEAK_ISOMORPHISM.value,
            help='order-problemで調べる写像の種類'
        )
        parser.add_argument(
            '--budget',
            type=int,
            default=DEFAULT_ORACLE_BUDGET,
            help=f'order-problemで列挙するグラフの上限(既定: {DEFAULT_ORACLE_BUDGET})'
        )
        parser.add_argument(
            '--node-budget',
            type=int,
            default=DEFAULT_NODE_BUDGET,
            help=f'写像の探索で試す割り当ての上限(既定: {DEFAULT_NODE_BUDGET})'
        )

    def run(self, args: argparse.Namespace) -> int:
        oracle = Oracle(args.node_budget, args.separator)

        if args.suite == 'order-problem':
            reports = [oracle.explore_weak_iso_order(
                args.max_vertices, args.grid, args.budget, MorphismKind(args.kind)
            )]

        else:
            params = GenParams(
                vertex_count=args.max_vertices,
                edge_probability=args.edge_probability,
                membership_grid=args.grid,
                seed=args.seed
            )
            reports = self._sweep(oracle, args.suite, params, args.trials)

        Utils.write(json.dumps(
            [report.to_dict() for report in reports], indent=2, ensure_ascii=False
        ) + '\n')

        return OracleCommand.exit_code(reports)

    @staticmethod
    def _sweep(
            oracle: Oracle, suite: str, params: GenParams, trials: int
    ) -> list[OracleReport]:
        if suite == 'closure':
            return [oracle.sweep_closure(params, trials)]

        if suite == 'decomposition':
            return oracle.sweep_decomposition(params, trials)

        if suite == 'equivalence':
            return [oracle.sweep_equivalence(params, trials)]

        return oracle.sweep_complete_props(params, trials)

    @staticmethod
    def exit_code(reports: list[OracleReport]) -> int:
        """
        結果から終了コードへの変換

        Parameters
        ----------
        reports : list[OracleReport]
            結果

        Returns
        -------
        int
            全て期待どおりなら0、期待外れの反例があれば2、それ以外の期待外れは3
        """
        unexpected = [report for report in reports if not report.as_expected]

        if not unexpected:
            return EXIT_OK

        if any(r.verdict is Verdict.COUNTEREXAMPLE_FOUND for r in unexpected):
            return EXIT_NEGATIVE

        return EXIT_RESOURCE
