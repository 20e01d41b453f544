"""Reduction of F-character tables modulo a prime ideal above ``ell``.

The ideal is never built: an embedding ``zeta_e -> zeta_bar`` into
``F_{ell^k}`` induces it, and reducing a value means evaluating its
power-basis coordinates at ``zeta_bar``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .analysis import CheckResult, FTableBundle, _result, _skip
from .errors import DomainError, InconsistencyError
from .exact.cyclotomic import Cyclotomic, cyclo_det
from .exact.finite_field import FqElement, fq_embed_root, fq_rank
from .fusion import FusionData
from .perm_group import is_prime, p_part
from .stable_ring import StableBasis


@dataclass(frozen=True, eq=False)
class ModReduction:
    ell: int
    k: int
    e: int  # conductor of the reduced matrix
    zeta_image: FqElement
    X_mod: tuple  # rows of FqElement
    rank: int
    det_image: FqElement  # det(X) reduced, nonzero iff the rank is full

    def to_dict(self) -> dict:
        return {"ell": self.ell, "k": self.k, "e": self.e, "rank": self.rank,
                "zeta_image": list(self.zeta_image.coeffs),
                "det_image": list(self.det_image.coeffs)}


def reduce_value(z: Cyclotomic, e: int, zeta: FqElement) -> FqElement:
    """Image of an algebraic integer of ``Q(zeta_e)`` under ``zeta_e -> zeta``."""
    z = z.to_conductor(e)
    out = zeta.field.zero()
    power = zeta.field.one()
    for c in z.coeffs:
        c = Fraction(c)
        if c.denominator != 1:
            raise InconsistencyError(f"{z} is not an algebraic integer in the power basis")
        if c:
            out = out + power * int(c.numerator)
        power = power * zeta
    return out


def reduce_matrix(X, ell: int, which: int = 0) -> ModReduction:
    """Reduce a cyclotomic integer matrix; ``which`` picks the order-e element."""
    if not is_prime(ell):
        raise DomainError(f"{ell} is not prime")
    rows = [[Cyclotomic.rational(x) if not isinstance(x, Cyclotomic) else x for x in r] for r in X]
    e = math.lcm(1, *(x.e for r in rows for x in r))
    if math.gcd(e, ell) != 1:
        raise DomainError(f"ell = {ell} divides the conductor {e}")
    k, zeta = fq_embed_root(ell, e, which)
    X_mod = tuple(tuple(reduce_value(x, e, zeta) for x in r) for r in rows)
    det = reduce_value(cyclo_det(rows), e, zeta) if rows and len(rows) == len(rows[0]) else zeta.field.zero()
    return ModReduction(ell, k, e, zeta, X_mod, fq_rank(X_mod), det)


def reduce_table(bundle: FTableBundle, ell: int, which: int = 0) -> ModReduction:
    p = bundle.fusion.p
    if ell == p:
        raise DomainError(f"ell equals p = {p}; use mod_p_statement for the p-modular case")
    return reduce_matrix(bundle.X, ell, which)


def check_mod_rank(red: ModReduction, F: FusionData, det_abs_sq: int | None = None) -> CheckResult:
    """Full rank of ``X mod M_ell``; with ``det_abs_sq`` also the cross-check
    ``rank full <=> ell does not divide |det X|^2``."""
    st = "rank(X mod M_ell) = |cl(F)| for ell != p"
    w = {"ell": red.ell, "k": red.k, "rank": red.rank, "expected": F.n_classes}
    ok = red.rank == F.n_classes
    if det_abs_sq is not None:
        consistent = (red.rank == F.n_classes) == (det_abs_sq % red.ell != 0)
        w["consistent_with_det"] = consistent
        ok = ok and consistent
    return _result(f"mod_rank[{red.ell}]", ok, st, F, **w)


def check_embedding_independence(bundle: FTableBundle, ell: int) -> CheckResult:
    st = "rank(X mod M_ell) does not depend on the order-e element chosen"
    name = f"embedding_independence[{ell}]"
    first = reduce_table(bundle, ell, 0)
    try:
        second = reduce_table(bundle, ell, 1)
    except DomainError:
        return _skip(name, st, f"only one element of order {first.e} in GF({ell}^{first.k})")
    return _result(name, first.rank == second.rank, st, bundle.fusion,
                   ranks=[first.rank, second.rank],
                   zeta_images=[list(first.zeta_image.coeffs), list(second.zeta_image.coeffs)])


def mod_p_statement(F: FusionData, B: StableBasis | None = None) -> CheckResult:
    """In a p-group the only p-regular element is 1, so every p-Brauer
    character of S is a multiple of the trivial one."""
    st = "the only F-class of p-regular elements is {1}"
    regular = [i for i, rep in enumerate(F.reps) if p_part(rep.order(), F.p)[0] == 1]
    ok = regular == [0] and F.classes[0] == frozenset({F.S.identity})
    return _result("mod_p_statement", ok, st, F, p_regular_classes=regular)


def run_mod_checks(bundle: FTableBundle, ells) -> tuple[list[CheckResult], list[dict]]:
    """Checks and per-ell report sections for every ``ell != p`` in ``ells``."""
    checks, sections = [mod_p_statement(bundle.fusion, bundle.basis)], []
    for ell in ells:
        if ell == bundle.fusion.p:
            continue
        red = reduce_table(bundle, ell)
        res = check_mod_rank(red, bundle.fusion, bundle.det_abs_sq)
        checks.append(res)
        checks.append(check_embedding_independence(bundle, ell))
        sections.append({"ell": ell, "k": red.k, "rank": red.rank,
                         "expected": bundle.fusion.n_classes, "status": res.status})
    return checks, sections

