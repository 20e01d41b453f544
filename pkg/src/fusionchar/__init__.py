"""Exact F-character tables of fusion systems realised by finite permutation groups."""

from __future__ import annotations

from .analysis import FTableBundle, build_bundle, run_checks
from .brauer_mod import reduce_table, run_mod_checks
from .catalog import load_catalog
from .char_table import CharacterTable, ClassFunction, character_table, dixon_schneider
from .errors import CapacityError, DomainError, FusionCharError, InconsistencyError
from .fusion import FusionData, build_fusion, product_fusion
from .perm_group import Permutation, PermGroup, parse_group, sylow_subgroup
from .pipeline import System, build_product_system, build_system
from .stable_ring import StableBasis, indecomposables, stable_basis

__version__ = "0.1.0"
