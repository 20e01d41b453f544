"""The shipped catalog of realised fusion systems, and group-file ingestion.

The catalog lives in ``data/catalog.json``; a different file with the same
layout can be passed to :func:`load_catalog` to extend it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import DomainError
from .perm_group import PermGroup, parse_group, parse_permutations
from .pipeline import System, build_product_system, build_system

KINDS = ("inner", "sylow", "non-sylow", "products")


@dataclass(frozen=True)
class Entry:
    name: str
    kind: str
    degree: int | None = None
    G: str = ""
    S: str = ""
    p: int = 0
    allow_non_sylow: bool = False
    factors: tuple = ()
    description: str = ""


@dataclass
class Catalog:
    entries: dict
    aliases: dict = field(default_factory=dict)
    version: int = 1
    _built: dict = field(default_factory=dict, repr=False)

    def resolve(self, name: str) -> Entry:
        key = self.aliases.get(name, name)
        if key not in self.entries:
            raise DomainError(f"unknown catalog entry {name!r}; known: {', '.join(sorted(self.entries))}")
        return self.entries[key]

    def names(self, only: str | None = None) -> list[str]:
        """Entry names, optionally filtered by kind (``products``, ``sylow``, ...)."""
        if only in (None, "", "all"):
            return sorted(self.entries)
        kinds = {k.strip() for k in only.split(",") if k.strip()}
        bad = kinds - set(KINDS)
        if bad:
            raise DomainError(f"unknown kind(s) {sorted(bad)}; expected some of {KINDS}")
        return sorted(n for n, e in self.entries.items() if e.kind in kinds)

    def build(self, name: str) -> System:
        entry = self.resolve(name)
        if entry.name not in self._built:
            if entry.kind == "products":
                a, b = (self.build(f) for f in entry.factors)
                system = build_product_system(a, b, name=entry.name)
            else:
                G = parse_group(entry.G, entry.degree, name=entry.name)
                _, gens = parse_permutations(entry.S, G.degree)
                S = G.subgroup(gens)
                system = build_system(G, S, entry.p, allow_non_sylow=entry.allow_non_sylow,
                                      name=entry.name)
            self._built[entry.name] = system
        return self._built[entry.name]


def _read(path: str | Path | None) -> dict:
    if path is None:
        return json.loads(resources.files("fusionchar").joinpath("data/catalog.json").read_text())
    return json.loads(Path(path).read_text())


def load_catalog(path: str | Path | None = None) -> Catalog:
    data = _read(path)
    entries = {}
    for raw in data.get("systems", []):
        e = Entry(name=raw["name"], kind=raw.get("kind", "sylow"), degree=raw.get("degree"),
                  G=raw.get("G", ""), S=raw.get("S", ""), p=int(raw["p"]),
                  allow_non_sylow=bool(raw.get("allow_non_sylow", False)),
                  description=raw.get("description", ""))
        entries[e.name] = e
    for raw in data.get("products", []):
        entries[raw["name"]] = Entry(name=raw["name"], kind="products",
                                     factors=tuple(raw["factors"]),
                                     description=raw.get("description", ""))
    for e in entries.values():
        for f in e.factors:
            if f not in entries:
                raise DomainError(f"product {e.name!r} names unknown factor {f!r}")
    return Catalog(entries, dict(data.get("aliases", {})), int(data.get("version", 1)))


def load_group_file(path: str | Path, degree: int | None = None, parent: PermGroup | None = None,
                    name: str | None = None) -> PermGroup:
    """Read a generator file; with ``parent`` the result is built as its subgroup
    and every generator must lie in it."""
    text = Path(path).read_text()
    if parent is None:
        return parse_group(text, degree, name=name or Path(path).stem)
    _, gens = parse_permutations(text, parent.degree)
    outside = [str(g) for g in gens if g not in parent]
    if outside:
        raise DomainError(f"generators not in G: {', '.join(outside)}")
    return parent.subgroup(gens, name=name or Path(path).stem)
