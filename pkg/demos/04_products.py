"""
Product fusion systems
======================

The stable lattice of a product is the tensor product of the factors'
lattices, so the table of the product is the Kronecker product of the
factor tables.
"""

from __future__ import annotations

from fusionchar import build_product_system, load_catalog
from fusionchar.analysis import check_product_kronecker

cat = load_catalog()
f = cat.build("s3-c3-p3")
prod = build_product_system(f, f)

print("factor |det X|^2 =", f.bundle.det_abs_sq)
print("product classes  =", prod.bundle.n)
print("product |det X|^2 =", prod.bundle.det_abs_sq, "=", f.bundle.det_abs_sq, "^ (2 * 2)")

r = check_product_kronecker(f.bundle, f.bundle, prod.bundle)
print(r.status, {k: r.witnesses[k] for k in ("lattice_index", "kronecker_equal")})
