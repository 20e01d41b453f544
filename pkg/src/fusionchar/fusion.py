"""Element-level data of the fusion system F_S(G) realised by G on S.

Only the partition of S into F-conjugacy classes is ever needed, and for a
realised system that partition is G-conjugacy restricted to S, so the
morphism category is never built.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DomainError
from .perm_group import (
    Permutation,
    PermGroup,
    direct_product,
    is_p_group,
    is_prime,
    p_part,
    pair_element,
    product_subgroup,
)


@dataclass(frozen=True, eq=False)
class FusionData:
    G: PermGroup
    S: PermGroup
    p: int
    classes: tuple  # frozensets of elements of S, identity class first
    reps: tuple  # fully centralised representative of each class
    s_centralizer_orders: tuple
    g_centralizer_orders: tuple
    s_class_blocks: tuple  # indices of the S-classes merged into each F-class
    sylow: bool
    factors: tuple | None = None
    name: str | None = field(default=None, compare=False)

    @property
    def n_classes(self) -> int:
        return len(self.classes)

    @property
    def saturation_guaranteed(self) -> bool:
        return self.sylow

    def class_of(self, x) -> int:
        x = tuple(x)
        for i, K in enumerate(self.classes):
            if x in K:
                return i
        raise DomainError(f"{Permutation(x)} is not in S")

    def __repr__(self) -> str:
        return f"<FusionData {self.name or ''} p={self.p} |S|={self.S.order} |cl(F)|={self.n_classes}>"


def _rep_key(S: PermGroup, x: Permutation):
    return (-S.centralizer_order(x), x.order(), x)


def build_fusion(G: PermGroup, S: PermGroup, p: int, allow_non_sylow: bool = False,
                 name: str | None = None) -> FusionData:
    """F-conjugacy classes of S with fully centralised representatives.

    Among the maximisers of ``|C_S(x)|`` in a class the representative has the
    least element order, then comes first in the canonical element order.
    """
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if not S.is_subgroup_of(G):
        raise DomainError("S must be constructed as a subgroup of G")
    if not is_p_group(S, p):
        raise DomainError(f"S has order {S.order}, not a power of {p}")
    sylow = S.order == p_part(G.order, p)[0]
    if not sylow and not allow_non_sylow:
        raise DomainError(
            f"S (order {S.order}) is not a Sylow {p}-subgroup of G (order {G.order}); "
            "saturation of F_S(G) is only guaranteed for Sylow S "
            "(pass allow_non_sylow to proceed anyway)"
        )

    s_members = set(S.elements)
    classes = []
    for c in G.conjugacy_classes:
        meet = c.members & s_members
        if meet:
            classes.append(frozenset(meet))
    classes.sort(key=min)

    s_idx = S.class_index
    reps, cs, cg, blocks = [], [], [], []
    for K in classes:
        rep = min(K, key=lambda x: _rep_key(S, x))
        reps.append(rep)
        cs.append(S.centralizer_order(rep))
        cg.append(G.centralizer_order(rep))
        blocks.append(tuple(sorted({s_idx[x] for x in K})))
    return FusionData(G, S, p, tuple(classes), tuple(reps), tuple(cs), tuple(cg),
                      tuple(blocks), sylow, name=name)


def inner_fusion(S: PermGroup, p: int, name: str | None = None) -> FusionData:
    return build_fusion(S, S, p, name=name)


def is_transitive(F: FusionData) -> bool:
    return F.n_classes == 2


def product_fusion(F1: FusionData, F2: FusionData, name: str | None = None) -> FusionData:
    """The product system on ``S1 x S2`` realised by ``G1 x G2``.

    Classes are ordered as pairs ``(K1, K2)`` with ``K1`` major, and the
    representatives are the pairs of factor representatives. The class
    partition is checked against the pairwise product partition.
    """
    if F1.p != F2.p:
        raise DomainError(f"product fusion needs a single prime, got {F1.p} and {F2.p}")
    G = direct_product(F1.G, F2.G)
    S = product_subgroup(G, F1.S, F2.S)
    raw = build_fusion(G, S, F1.p, allow_non_sylow=not (F1.sylow and F2.sylow))

    classes, reps, cs, cg, blocks = [], [], [], [], []
    found = {K: i for i, K in enumerate(raw.classes)}
    s_idx = S.class_index
    for K1, r1 in zip(F1.classes, F1.reps):
        for K2, r2 in zip(F2.classes, F2.reps):
            K = frozenset(pair_element(a, b) for a in K1 for b in K2)
            if K not in found:
                raise DomainError("product classes differ from pairs of factor classes")
            rep = pair_element(r1, r2)
            c = S.centralizer_order(rep)
            if c != max(S.centralizer_order(x) for x in K):
                raise DomainError("pair of fully centralised representatives is not fully centralised")
            classes.append(K)
            reps.append(rep)
            cs.append(c)
            cg.append(G.centralizer_order(rep))
            blocks.append(tuple(sorted({s_idx[x] for x in K})))
    if len(classes) != raw.n_classes:
        raise DomainError("product classes differ from pairs of factor classes")
    return FusionData(G, S, F1.p, tuple(classes), tuple(reps), tuple(cs), tuple(cg),
                      tuple(blocks), raw.sylow, factors=(F1, F2), name=name)
