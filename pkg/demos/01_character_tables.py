"""
Character tables from permutation generators
============================================

Build a group from cycle notation, compute its ordinary character table
exactly (values live in a cyclotomic field) and check the orthogonality
relations by hand.
"""

from __future__ import annotations

from fusionchar import dixon_schneider, parse_group

# S4 acting on four points
G = parse_group("(1 2), (1 2 3 4)")
print("order", G.order, "classes", len(G.conjugacy_classes))

T = dixon_schneider(G)
for chi in T.irr:
    print([str(v) for v in chi.values])

# sum of squared degrees recovers |G|
print("sum d^2 =", sum(d * d for d in T.degrees))

# a table with irrational values: the cyclic group of order 5
C5 = parse_group("(1 2 3 4 5)")
T5 = dixon_schneider(C5)
print("conductor", T5.conductor)
print([str(v) for v in T5.irr[1].values])

# first orthogonality relation for two distinct characters of S4
sizes = [c.size for c in G.conjugacy_classes]
a, b = T.irr[1], T.irr[2]
print("<a, b> * |G| =", sum((x * y.conj() * m for x, y, m in zip(a.values, b.values, sizes)),
                            start=a.values[0] * 0))
