"""Command-line interface.

Exit codes: 0 when every non-skipped check passes, 1 when a check fails,
2 on a domain, capacity or input error.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from .catalog import load_catalog, load_group_file
from .errors import FusionCharError
from .perm_group import is_prime, sylow_subgroup
from .pipeline import build_product_system, build_system
from .report import (
    DEFAULT_ELLS,
    batch_report,
    format_batch_table,
    indecomposables_report,
    product_report,
    table_report,
    verify_report,
)
from .serialize import dumps


def _parse_ells(value: str | None) -> tuple[int, ...]:
    if value is None:
        return DEFAULT_ELLS
    try:
        ells = tuple(sorted({int(x) for x in value.split(",") if x.strip()}))
    except ValueError:
        raise click.BadParameter(f"expected comma-separated primes, got {value!r}") from None
    bad = [x for x in ells if not is_prime(x)]
    if bad:
        raise click.BadParameter(f"not prime: {bad}")
    return ells


def _emit(doc, out: str | None) -> None:
    text = dumps(doc) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        click.echo(text, nl=False)


def _source_options(f):
    f = click.option("--catalog-file", type=click.Path(exists=True, dir_okay=False),
                     help="Catalog JSON to use instead of the shipped one.")(f)
    f = click.option("--allow-non-sylow", is_flag=True, help="Accept S that is not Sylow in G.")(f)
    f = click.option("--p", "p", type=int, help="The prime (with --file).")(f)
    f = click.option("--s-file", type=click.Path(exists=True, dir_okay=False),
                     help="Generators of S (default: a Sylow p-subgroup of G).")(f)
    f = click.option("--file", "g_file", type=click.Path(exists=True, dir_okay=False),
                     help="Group file with generators of G.")(f)
    f = click.option("--catalog", "catalog_names", multiple=True, help="Catalog entry name.")(f)
    return f


def _config(command: str, **kw) -> dict:
    return {"command": command, **{k: v for k, v in kw.items() if v not in (None, (), False)}}


def _system_from_source(catalog_names, g_file, s_file, p, allow_non_sylow, catalog_file):
    if bool(catalog_names) == bool(g_file):
        raise click.UsageError("give exactly one source: --catalog NAME or --file PATH")
    if catalog_names:
        if len(catalog_names) != 1:
            raise click.UsageError("this command takes a single --catalog")
        catalog = load_catalog(catalog_file)
        entry = catalog.resolve(catalog_names[0])
        system = catalog.build(entry.name)
        factors = tuple(catalog.build(f) for f in entry.factors) if entry.factors else None
        return system, factors
    if p is None:
        raise click.UsageError("--file needs --p")
    if not is_prime(p):
        raise click.BadParameter(f"{p} is not prime", param_hint="--p")
    G = load_group_file(g_file)
    S = load_group_file(s_file, parent=G) if s_file else sylow_subgroup(G, p)
    return build_system(G, S, p, allow_non_sylow=allow_non_sylow, name=Path(g_file).stem), None


def _run(fn):
    try:
        return fn()
    except FusionCharError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)


@click.group()
def main():
    """Exact F-character tables of realised fusion systems."""


@main.command()
@_source_options
@click.option("--out", type=click.Path(dir_okay=False), help="Write the JSON report here.")
def table(catalog_names, g_file, s_file, p, allow_non_sylow, catalog_file, out):
    """Print the basis of R(F) and the F-character table."""
    def go():
        system, _ = _system_from_source(catalog_names, g_file, s_file, p, allow_non_sylow, catalog_file)
        cfg = _config("table", catalog=list(catalog_names), file=g_file, s_file=s_file, p=p,
                      allow_non_sylow=allow_non_sylow)
        _emit(table_report(system, cfg), out)
    _run(go)


@main.command()
@_source_options
@click.option("--ell", help="Comma-separated primes for the mod-ell checks.")
@click.option("--out", type=click.Path(dir_okay=False))
def verify(catalog_names, g_file, s_file, p, allow_non_sylow, catalog_file, ell, out):
    """Run every identity check on one system."""
    ells = _parse_ells(ell)

    def go():
        system, factors = _system_from_source(catalog_names, g_file, s_file, p, allow_non_sylow,
                                              catalog_file)
        cfg = _config("verify", catalog=list(catalog_names), file=g_file, s_file=s_file, p=p,
                      allow_non_sylow=allow_non_sylow, ell=list(ells))
        doc = verify_report(system, ells, cfg, factors)
        _emit(doc, out)
        return doc["summary"]["ok"]
    sys.exit(0 if _run(go) else 1)


@main.command()
@click.option("--only", help="Restrict to entry kinds: inner, sylow, non-sylow, products.")
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--ell", help="Comma-separated primes for the mod-ell checks.")
@click.option("--catalog-file", type=click.Path(exists=True, dir_okay=False))
@click.option("--out", type=click.Path(dir_okay=False))
def batch(only, jobs, ell, catalog_file, out):
    """Verify every catalog entry and print a summary table."""
    ells = _parse_ells(ell)

    def go():
        catalog = load_catalog(catalog_file)
        names = catalog.names(only)
        doc = batch_report(names, ells, jobs=jobs, catalog_path=catalog_file, catalog=catalog)
        doc["config"]["only"] = only
        if out:
            _emit(doc, out)
        else:
            _emit(doc["summary"], None)
        click.echo(format_batch_table(doc), err=True)
        return doc["summary"]["ok"]
    sys.exit(0 if _run(go) else 1)


@main.command()
@click.option("--catalog", "catalog_names", multiple=True, required=True,
              help="Give exactly two catalog entries.")
@click.option("--catalog-file", type=click.Path(exists=True, dir_okay=False))
@click.option("--ell", help="Comma-separated primes for the mod-ell checks.")
@click.option("--out", type=click.Path(dir_okay=False))
def product(catalog_names, catalog_file, ell, out):
    """Build F1 x F2 and check the product laws."""
    ells = _parse_ells(ell)
    if len(catalog_names) != 2:
        raise click.UsageError("product takes exactly two --catalog entries")

    def go():
        catalog = load_catalog(catalog_file)
        a, b = (catalog.build(catalog.resolve(n).name) for n in catalog_names)
        prod = build_product_system(a, b)
        doc = product_report(a, b, prod, ells, _config("product", catalog=list(catalog_names),
                                                       ell=list(ells)))
        _emit(doc, out)
        return doc["summary"]["ok"]
    sys.exit(0 if _run(go) else 1)


@main.command()
@_source_options
@click.option("--degree-bound", type=click.IntRange(min=1), help="Default: 2|S|.")
@click.option("--out", type=click.Path(dir_okay=False))
def indecomposables(catalog_names, g_file, s_file, p, allow_non_sylow, catalog_file,
                    degree_bound, out):
    """List F-indecomposable characters up to a degree bound."""
    def go():
        system, _ = _system_from_source(catalog_names, g_file, s_file, p, allow_non_sylow, catalog_file)
        cfg = _config("indecomposables", catalog=list(catalog_names), file=g_file, s_file=s_file,
                      p=p, allow_non_sylow=allow_non_sylow, degree_bound=degree_bound)
        doc = indecomposables_report(system, degree_bound, cfg)
        _emit(doc, out)
        if not doc["summary"]["complete"]:
            click.echo("warning: " + doc["summary"]["warning"], err=True)
    _run(go)


if __name__ == "__main__":
    main()
