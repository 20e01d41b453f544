"""One-call construction of a realised fusion system and all its derived data."""

from __future__ import annotations

from dataclasses import dataclass

from .analysis import FTableBundle, build_bundle
from .char_table import CharacterTable, character_table
from .fusion import FusionData, build_fusion, product_fusion
from .perm_group import PermGroup
from .stable_ring import StableBasis, stable_basis


@dataclass(frozen=True, eq=False)
class System:
    name: str
    fusion: FusionData
    irr_s: CharacterTable
    irr_g: CharacterTable
    basis: StableBasis
    bundle: FTableBundle

    @property
    def p(self) -> int:
        return self.fusion.p


def from_fusion(F: FusionData, name: str | None = None) -> System:
    irr_s = character_table(F.S)
    irr_g = character_table(F.G)
    B = stable_basis(F, irr_s)
    return System(name or F.name or "system", F, irr_s, irr_g, B, build_bundle(F, B, irr_g))


def build_system(G: PermGroup, S: PermGroup, p: int, allow_non_sylow: bool = False,
                 name: str | None = None) -> System:
    return from_fusion(build_fusion(G, S, p, allow_non_sylow=allow_non_sylow, name=name), name)


def build_product_system(sys1: System, sys2: System, name: str | None = None) -> System:
    name = name or f"{sys1.name}_x_{sys2.name}"
    return from_fusion(product_fusion(sys1.fusion, sys2.fusion, name=name), name)
