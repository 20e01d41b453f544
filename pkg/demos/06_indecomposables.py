"""
Indecomposable stable characters
================================

Genuine stable characters form a monoid. Its atoms (the stable characters
that are not sums of two nonzero stable characters) are enumerated up to a
degree bound; when the bound is large enough the answer is certified
complete, and we also test whether the atoms freely generate the ring.
"""

from __future__ import annotations

from fusionchar import indecomposables, load_catalog

cat = load_catalog()
for name in ("s3-c3-p3", "a4-v4-p2", "s4-d8-p2"):
    s = cat.build(name)
    ind = indecomposables(s.fusion, s.basis)
    print(f"{name}: {len(ind.atoms)} atoms, complete={ind.complete}, free={ind.free_generation}")
    for a in ind.atoms:
        print("   ", a)

# a bound that is too small leaves the search undecided
s = cat.build("s3-c3-p3")
print(indecomposables(s.fusion, s.basis, degree_bound=1))
