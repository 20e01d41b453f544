"""
Fusion classes and the ring of stable characters
================================================

S4 realises a fusion system on its Sylow 2-subgroup D8. Elements of D8 that
are conjugate in S4 get merged; the stable characters of D8 are the virtual
characters constant on the merged classes. They form a lattice, and we take
its Hermite-normal-form basis.
"""

from __future__ import annotations

from fusionchar import build_fusion, character_table, parse_group, stable_basis, sylow_subgroup

G = parse_group("(1 2), (1 2 3 4)")
S = sylow_subgroup(G, 2)
F = build_fusion(G, S, 2)

print("|S| =", S.order, " S-classes:", len(S.conjugacy_classes), " F-classes:", F.n_classes)
for K, x, cs, cg in zip(F.classes, F.reps, F.s_centralizer_orders, F.g_centralizer_orders):
    print(f"  rep {str(x):<14} size {len(K)}  |C_S| = {cs:<2}  |C_G| = {cg}")

irr_s = character_table(S)
B = stable_basis(F, irr_s)

# each basis element written over Irr(S)
print("basis rows over Irr(S):")
print(B.rows)

# the F-character table: basis elements evaluated at the class representatives
print("X_B(F):")
for row in B.class_values:
    print("  ", [str(v) for v in row])
