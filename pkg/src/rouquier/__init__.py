"""Rouquier blocks of cyclotomic Hecke algebras of the groups G(de,e,r)."""

from .ariki_koike import AKSpecialization, Linear, NZero, rouquier_blocks
from .blocks import BlockPartition, InvariantError
from .descent import GroupParams, blocks_for_group
from .rank2 import Rank2Spec, a_value, A_value, rank2_blocks

__version__ = "0.1.0"

__all__ = [
    "AKSpecialization", "Linear", "NZero", "rouquier_blocks",
    "BlockPartition", "InvariantError", "GroupParams", "blocks_for_group",
    "Rank2Spec", "a_value", "A_value", "rank2_blocks",
]
