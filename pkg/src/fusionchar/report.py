"""JSON report documents: ``{system, config, checks, summary}``.

Reports contain no timestamps or timings, so they are byte-stable.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

from . import analysis as A
from .brauer_mod import run_mod_checks
from .catalog import Catalog, load_catalog
from .errors import CapacityError
from .perm_group import is_prime
from .pipeline import System
from .stable_ring import indecomposables

DEFAULT_ELLS = (2, 3, 5, 7)


def _counts(checks) -> dict:
    out = {A.PASS: 0, A.FAIL: 0, A.SKIPPED: 0}
    for c in checks:
        out[c.status] += 1
    return {"passed": out[A.PASS], "failed": out[A.FAIL], "skipped": out[A.SKIPPED]}


def _alpha(system: System) -> int | None:
    return A.p_exponent(system.bundle.det_abs_sq, system.p)


def system_info(system: System) -> dict:
    F = system.fusion
    return {
        "name": system.name,
        "p": F.p,
        "order_G": F.G.order,
        "order_S": F.S.order,
        "sylow": F.sylow,
        "n_classes": F.n_classes,
    }


def table_report(system: System, config: dict | None = None) -> dict:
    F, B, b = system.fusion, system.basis, system.bundle
    table = {
        "basis": B.rows,
        "class_representatives": list(F.reps),
        "class_sizes": [len(K) for K in F.classes],
        "centralizer_orders_S": list(F.s_centralizer_orders),
        "centralizer_orders_G": list(F.g_centralizer_orders),
        "X": b.X,
        "irr_S_conductor": system.irr_s.conductor,
        "decomposition_matrix": b.D,
        "cartan_matrix": b.C,
    }
    ip = A.inner_product_decomposition(b)
    if ip.tolist() != b.D.tolist():
        # <chi|_S, psi> differs from the coordinate when the basis is not orthonormal
        table["restriction_inner_products"] = ip
    summary = {"det_abs_sq": b.det_abs_sq, "alpha": _alpha(system), "det_C": b.det_C}
    return {"system": system_info(system), "config": config or {}, "table": table,
            "checks": [], "summary": summary}


def _ind_info(system: System) -> dict | None:
    """|Ind(F)| for groups of order p^a q^b, when atom enumeration is complete."""
    primes = [q for q in range(2, system.fusion.G.order + 1)
              if system.fusion.G.order % q == 0 and is_prime(q)]
    if len(primes) > 2:
        return None
    try:
        ind = indecomposables(system.fusion, system.basis, cap=200_000)
    except CapacityError:
        return {"complete": False}
    return {"complete": ind.complete, "count": len(ind.atoms) if ind.complete else None}


def verify_checks(system: System, ells=DEFAULT_ELLS, factors: tuple | None = None):
    b = system.bundle
    checks = A.run_checks(b)
    if factors is not None:
        checks.append(A.check_product_kronecker(factors[0].bundle, factors[1].bundle, b))
    mod_checks, sections = run_mod_checks(b, ells)
    return checks + mod_checks, sections


def verify_report(system: System, ells=DEFAULT_ELLS, config: dict | None = None,
                  factors: tuple | None = None) -> dict:
    checks, sections = verify_checks(system, ells, factors)
    b = system.bundle
    summary = {
        **_counts(checks),
        "ok": all(c.ok for c in checks),
        "det_abs_sq": b.det_abs_sq,
        "alpha": _alpha(system),
        "det_C": b.det_C,
        "mod_ell": sections,
    }
    ind = _ind_info(system)
    if ind is not None:
        summary["indecomposables"] = ind
    return {"system": system_info(system), "config": config or {},
            "checks": [c.to_dict() for c in checks], "summary": summary}


def product_report(sys1: System, sys2: System, product: System, ells=DEFAULT_ELLS,
                   config: dict | None = None) -> dict:
    doc = verify_report(product, ells, config, factors=(sys1, sys2))
    doc["factors"] = [system_info(sys1), system_info(sys2)]
    doc["table"] = table_report(product)["table"]
    return doc


def indecomposables_report(system: System, degree_bound: int | None = None,
                           config: dict | None = None) -> dict:
    ind = indecomposables(system.fusion, system.basis, degree_bound)
    degs = system.irr_s.degrees
    atoms = [{"coordinates": list(a), "degree": sum(x * int(d) for x, d in zip(a, degs))}
             for a in ind.atoms]
    summary = {
        "degree_bound": ind.degree_bound,
        "n_atoms": len(ind.atoms),
        "complete": ind.complete,
        "free_generation": ind.free_generation,
        "n_stable_within_bound": ind.n_stable,
    }
    if not ind.complete:
        summary["warning"] = "atoms are not certified to be all of Ind(F); raise --degree-bound"
    return {"system": system_info(system), "config": config or {}, "atoms": atoms,
            "checks": [], "summary": summary}


# batch ------------------------------------------------------------------------

def _verify_entry(args) -> dict:
    name, ells, catalog_path = args
    catalog = load_catalog(catalog_path)
    entry = catalog.resolve(name)
    system = catalog.build(name)
    factors = tuple(catalog.build(f) for f in entry.factors) if entry.factors else None
    return verify_report(system, ells, {"command": "verify", "catalog": name,
                                        "ell": list(ells)}, factors)


def batch_report(names, ells=DEFAULT_ELLS, jobs: int = 1, catalog_path=None,
                 catalog: Catalog | None = None) -> dict:
    names = sorted(names)
    if jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            docs = list(pool.map(_verify_entry, [(n, tuple(ells), catalog_path) for n in names]))
    else:
        catalog = catalog or load_catalog(catalog_path)
        docs = []
        for n in names:
            entry = catalog.resolve(n)
            factors = tuple(catalog.build(f) for f in entry.factors) if entry.factors else None
            docs.append(verify_report(catalog.build(n), ells,
                                      {"command": "verify", "catalog": n, "ell": list(ells)}, factors))
    rows = []
    for n, d in zip(names, docs):
        s = d["summary"]
        rows.append({"system": n, "n_classes": d["system"]["n_classes"], "p": d["system"]["p"],
                     "alpha": s["alpha"], "det_C": s["det_C"], "passed": s["passed"],
                     "failed": s["failed"], "skipped": s["skipped"]})
    failed = sum(r["failed"] for r in rows)
    return {"system": None, "config": {"command": "batch", "ell": list(ells), "systems": names},
            "checks": [], "reports": docs, "summary": {"systems": rows, "failed": failed,
                                                      "ok": failed == 0}}


def format_batch_table(doc: dict) -> str:
    head = f"{'system':<24}{'|cl(F)|':>8}{'p':>4}{'alpha':>7}{'det C':>8}{'pass':>6}{'fail':>6}{'skip':>6}"
    lines = [head]
    for r in doc["summary"]["systems"]:
        alpha = "-" if r["alpha"] is None else str(r["alpha"])
        lines.append(f"{r['system']:<24}{r['n_classes']:>8}{r['p']:>4}{alpha:>7}{r['det_C']:>8}"
                     f"{r['passed']:>6}{r['failed']:>6}{r['skipped']:>6}")
    return "\n".join(lines)

