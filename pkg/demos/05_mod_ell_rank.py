"""
Reducing an F-character table modulo a prime
============================================

Table entries are cyclotomic integers. Sending a primitive e-th root of
unity to an element of order e in a finite field of characteristic ell
reduces the table; for ell different from p its rank stays full.
"""

from __future__ import annotations

from fusionchar import load_catalog, reduce_table
from fusionchar.brauer_mod import check_embedding_independence, check_mod_rank, mod_p_statement, reduce_matrix

cat = load_catalog()
s = cat.build("d8-inner")
b = s.bundle

for ell in (3, 5, 7):
    red = reduce_table(b, ell)
    print(f"ell={ell}: GF({ell}^{red.k}), rank {red.rank} of {b.n}, det image {red.det_image}")
    print("   ", check_mod_rank(red, b.fusion, b.det_abs_sq).status,
          check_embedding_independence(b, ell).status)

# at ell = p only the identity class is p-regular
print(mod_p_statement(b.fusion).witnesses)

# negative control: duplicate a row and the rank drops
X = b.X.copy()
X[1] = X[0]
print("corrupted rank mod 3:", reduce_matrix(X, 3).rank)
