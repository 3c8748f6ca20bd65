from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class GenParams:
    """
    ランダムなグラフの生成条件

    Attributes
    ----------
    vertex_count : int
        頂点数、掃引では各試行の頂点数の最大値
    edge_probability : Fraction
        各組に辺を置く確率
    membership_grid : int
        所属度の刻みg、所属度は0, 1/g, ..., g/gから選ばれる
    complete_only : bool
        Trueの場合、辺の所属度を端点の所属度のrminにする
    seed : int
        乱数のシード
    """

    vertex_count: int = 4
    edge_probability: Fraction = Fraction(1, 2)
    membership_grid: int = 10
    complete_only: bool = False
    seed: int = 0

    def __post_init__(self):
        if isinstance(self.vertex_count, bool) or self.vertex_count < 0:
            raise ValueError(f'vertex_countは0以上にしてください: {self.vertex_count}')

        probability = Fraction(self.edge_probability)

        if not 0 <= probability <= 1:
            raise ValueError(
                f'edge_probabilityは0以上1以下にしてください: {self.edge_probability}'
            )

        object.__setattr__(self, 'edge_probability', probability)

        if isinstance(self.membership_grid, bool) or self.membership_grid < 1:
            raise ValueError(
                f'membership_gridは1以上にしてください: {self.membership_grid}'
            )

        if not -2 ** 63 <= self.seed < 2 ** 64:
            raise ValueError(f'seedは64ビットの整数にしてください: {self.seed}')
