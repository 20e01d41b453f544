"""
Machine-checking the identities of an F-character table
========================================================

A System bundles the fusion system, the stable basis B, the table X, the
decomposition matrix D (restrictions from G written in B), the projective
characters Phi and the Cartan matrix C = D^T D. Every check returns a
result with a status and witnesses instead of raising.
"""

from __future__ import annotations

from fusionchar import load_catalog, run_checks

cat = load_catalog()
system = cat.build("s4-d8-p2")
b = system.bundle

print("D =")
print(b.D)
print("C =")
print(b.C)
print("|det X|^2 =", b.det_abs_sq, "  det C =", b.det_C)
print("|C_G(x_K)| =", b.delta)

# |det X|^2 * det C equals the product of the G-centraliser orders
prod = 1
for c in b.delta:
    prod *= c
print("product check:", b.det_abs_sq * b.det_C, "==", prod)

for r in run_checks(b):
    print(f"  {r.status:<7} {r.name}")

# a witness in detail
(r,) = [r for r in run_checks(b) if r.name == "power_of_p"]
print(r.to_dict()["witnesses"])
