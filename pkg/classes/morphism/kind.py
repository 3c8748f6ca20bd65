from enum import Enum


class MorphismKind(Enum):
    """
    写像の種類

    値はCLIの--kindで使う名前
    """

    HOMOMORPHISM = 'hom'
    WEAK_ISOMORPHISM = 'weak-iso'
    WEAK_CO_ISOMORPHISM = 'weak-co-iso'
    ISOMORPHISM = 'iso'

    @property
    def bijective(self) -> bool:
        return self is not MorphismKind.HOMOMORPHISM

    @property
    def bounds_vertices(self) -> bool:
        """
        頂点の所属度が像以下であることを要求するかどうか
        """
        return self in (MorphismKind.HOMOMORPHISM, MorphismKind.WEAK_CO_ISOMORPHISM)

    @property
    def bounds_edges(self) -> bool:
        """
        辺の所属度が像以下であることを要求するかどうか
        """
        return self in (MorphismKind.HOMOMORPHISM, MorphismKind.WEAK_ISOMORPHISM)

    @property
    def preserves_vertices(self) -> bool:
        """
        頂点の所属度が像と等しいことを要求するかどうか
        """
        return self in (MorphismKind.WEAK_ISOMORPHISM, MorphismKind.ISOMORPHISM)

    @property
    def preserves_edges(self) -> bool:
        """
        辺の所属度が像と等しいことを、両方向で要求するかどうか
        """
        return self in (MorphismKind.WEAK_CO_ISOMORPHISM, MorphismKind.ISOMORPHISM)
