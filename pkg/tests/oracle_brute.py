"""Independent brute-force oracle for the determinant identities.

Shares no code with the package: it parses the catalog generators itself,
closes them under composition, finds G-classes by conjugating with every
element, and takes centralisers by counting commuting pairs.

For each system it records, over the F-classes K = (G-class) & S:
    prod_K max_{x in K} |C_S(x)|,  prod_K |C_G(x_K)|_p,  prod_K |C_G(x_K)|_p'
and, for inner systems (G = S), prod |C_S(x)| over S-classes, which by
column orthogonality of the S-table is |det X|^2.

Run ``python tests/oracle_brute.py`` to regenerate tests/golden/oracle.json.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
CATALOG = ROOT / "src" / "fusionchar" / "data" / "catalog.json"
GOLDEN = ROOT / "tests" / "golden" / "oracle.json"


def parse(text: str, n: int) -> list[tuple[int, ...]]:
    gens = []
    for tok in re.findall(r"(?:\([^)]*\))+", text):
        img = list(range(n))
        for cyc in re.findall(r"\(([^)]*)\)", tok):
            pts = [int(x) - 1 for x in re.split(r"[\s,]+", cyc.strip()) if x]
            for a, b in zip(pts, pts[1:] + pts[:1]):
                img[a] = b
        gens.append(tuple(img))
    return gens


def compose(a, b):  # apply a, then b
    return tuple(b[i] for i in a)


def inverse(a):
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


def closure(gens, n):
    e = tuple(range(n))
    seen, todo = {e}, [e]
    while todo:
        x = todo.pop()
        for g in gens:
            y = compose(x, g)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def shift(a, k, n):
    """Embed a permutation of {0..len(a)-1} into degree n at offset k."""
    out = list(range(n))
    for i, j in enumerate(a):
        out[i + k] = j + k
    return tuple(out)


def g_classes(G):
    left, classes = set(G), []
    while left:
        x = min(left)
        cls = {compose(compose(inverse(g), x), g) for g in G}
        classes.append(cls)
        left -= cls
    return classes


def centralizer(H, x):
    return sum(1 for h in H if compose(h, x) == compose(x, h))


def p_split(n, p):
    pp = 1
    while n % p == 0:
        n //= p
        pp *= p
    return pp, n


def analyse(G, S, p):
    cs_prod = cgp_prod = cgpp_prod = 1
    fclasses = []
    for cls in g_classes(G):
        K = cls & S
        if not K:
            continue
        best = max(centralizer(S, x) for x in K)
        rep = next(x for x in sorted(K) if centralizer(S, x) == best)
        cg = centralizer(G, rep)
        pp, ppp = p_split(cg, p)
        cs_prod *= best
        cgp_prod *= pp
        cgpp_prod *= ppp
        fclasses.append({"size": len(K), "C_S": best, "C_G": cg})
    fclasses.sort(key=lambda d: (d["size"] != 1, d["C_G"], d["C_S"], d["size"]))
    out = {
        "p": p,
        "order_G": len(G),
        "order_S": len(S),
        "n_classes": len(fclasses),
        "prod_C_S": cs_prod,
        "prod_C_G_p": cgp_prod,
        "prod_C_G_p_prime": cgpp_prod,
        "C_G_sorted": sorted(d["C_G"] for d in fclasses),
    }
    a, rest = 0, cs_prod
    while rest % p == 0:
        rest //= p
        a += 1
    out["alpha"] = a if rest == 1 else None
    if G == S:
        out["inner_column_orthogonality"] = 1
        for cls in g_classes(S):
            out["inner_column_orthogonality"] *= centralizer(S, min(cls))
    return out


def load_systems():
    data = json.loads(CATALOG.read_text())
    raw = {}
    for e in data["systems"]:
        n = e["degree"]
        G = closure(parse(e["G"], n), n)
        S = closure(parse(e["S"], n), n)
        raw[e["name"]] = (G, S, e["p"], n, e.get("allow_non_sylow", False))
    for prod in data["products"]:
        (G1, S1, p, n1, _), (G2, S2, _, n2, _) = (raw[f] for f in prod["factors"])
        n = n1 + n2
        G = {compose(shift(a, 0, n), shift(b, n1, n)) for a in G1 for b in G2}
        S = {compose(shift(a, 0, n), shift(b, n1, n)) for a in S1 for b in S2}
        raw[prod["name"]] = (G, S, p, n, False)
    return raw


def main():
    golden = {}
    for name, (G, S, p, _, non_sylow) in sorted(load_systems().items()):
        if non_sylow:
            continue
        golden[name] = analyse(G, S, p)
    GOLDEN.parent.mkdir(parents=True, exist_ok=True)
    GOLDEN.write_text(json.dumps(golden, indent=2, sort_keys=True) + "\n")
    print(json.dumps({k: (v["prod_C_S"], v["prod_C_G_p_prime"], v["alpha"]) for k, v in golden.items()}))


if __name__ == "__main__":
    main()
