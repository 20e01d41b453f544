"""F-character tables, decomposition and Cartan matrices, and exact checks.

Every check returns a :class:`CheckResult`; a failing check carries exact
witnesses and never raises, so a batch run always produces a full report.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .char_table import (
    CharacterTable,
    ClassFunction,
    combination,
    inner_product,
    irr_decompose,
    regular_character,
    restrict,
)
from .errors import InconsistencyError
from .exact.cyclotomic import Cyclotomic, cyclo_conj_matrix, cyclo_det
from .exact.intmat import int_det, int_matrix, lattice_index, random_unimodular
from .fusion import FusionData
from .perm_group import p_part
from .stable_ring import StableBasis, coordinates

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"
NOT_SATURATED = "S is not Sylow in G: saturation not guaranteed"


@dataclass
class CheckResult:
    name: str
    status: str
    statement: str
    witnesses: dict = field(default_factory=dict)
    note: str | None = None

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_dict(self) -> dict:
        d = {"name": self.name, "status": self.status, "paper_anchor": self.statement,
             "witnesses": self.witnesses}
        if self.note:
            d["note"] = self.note
        return d


def _result(name: str, ok: bool, statement: str, F: FusionData | None = None, **witnesses) -> CheckResult:
    note = NOT_SATURATED if F is not None and not F.sylow else None
    return CheckResult(name, PASS if ok else FAIL, statement, witnesses, note)


def _skip(name: str, statement: str, reason: str) -> CheckResult:
    return CheckResult(name, SKIPPED, statement, {}, reason)


@dataclass(frozen=True, eq=False)
class FTableBundle:
    fusion: FusionData
    basis: StableBasis
    irr_g: CharacterTable
    X: np.ndarray  # basis elements x F-classes
    D: np.ndarray  # Irr(G) x basis, integer
    phi: tuple  # projective characters, class functions on G
    P: np.ndarray  # phi values at the F-class representatives
    C: np.ndarray  # Cartan matrix D^T D
    det_X: Cyclotomic
    det_abs_sq: int
    det_C: int
    delta: tuple  # |C_G(x_K)|

    @property
    def n(self) -> int:
        return self.X.shape[0]


def abs_sq_integer(z: Cyclotomic) -> int:
    """``z * conj(z)`` as a nonnegative integer; raises if it is not one."""
    v = (z * z.conj()).to_rational()
    if v is None or Fraction(v).denominator != 1 or v < 0:
        raise InconsistencyError(f"|det|^2 = {z * z.conj()} is not a nonnegative integer")
    return int(v)


def build_bundle(F: FusionData, B: StableBasis, irr_g: CharacterTable) -> FTableBundle:
    G, S = F.G, F.S
    if irr_g.group is not G:
        raise InconsistencyError("irr_g is not the table of F's G")
    D = int_matrix([coordinates(restrict(chi, S), B) for chi in irr_g.irr], (0, B.rank))
    phi = tuple(combination([int(x) for x in D[:, j]], irr_g) for j in range(B.rank))
    g_idx = G.class_index
    cols = [g_idx[rep] for rep in F.reps]
    P = np.empty((B.rank, F.n_classes), dtype=object)
    for i, f in enumerate(phi):
        for j, c in enumerate(cols):
            P[i, j] = f.values[c]
    C = D.T.dot(D)
    det_X = cyclo_det(B.class_values)
    return FTableBundle(F, B, irr_g, B.class_values, D, phi, P, C, det_X,
                        abs_sq_integer(det_X), int_det(C), tuple(F.g_centralizer_orders))


def _prod(xs) -> int:
    return math.prod(int(x) for x in xs)


# identities -------------------------------------------------------------------

def check_orthogonality(b: FTableBundle) -> CheckResult:
    st = "conj(P)^T X = diag(|C_G(x_K)|); X and P nonsingular"
    lhs = cyclo_conj_matrix(b.P).T.dot(b.X)
    n = b.n
    expected = np.array([[b.delta[i] if i == j else 0 for j in range(n)] for i in range(n)], dtype=object)
    eq = all(lhs[i, j] == expected[i, j] for i in range(n) for j in range(n))
    det_p = cyclo_det(b.P)
    ok = eq and not b.det_X.is_zero() and not det_p.is_zero()
    w = {"delta": list(b.delta)}
    if not ok:
        w.update(lhs=lhs, det_X=b.det_X, det_P=det_p)
    return _result("orthogonality", ok, st, b.fusion, **w)


def check_zero_off_p(b: FTableBundle) -> CheckResult:
    st = "Phi_psi(g) = 0 for every g that is not a p-element"
    G, p = b.fusion.G, b.fusion.p
    bad = []
    for k, c in enumerate(G.conjugacy_classes):
        if p_part(c.element_order, p)[1] != 1:
            for i, f in enumerate(b.phi):
                if not f.values[k].is_zero():
                    bad.append({"psi": i, "class": c.representative, "value": f.values[k]})
    return _result("zero_off_p", not bad, st, b.fusion, violations=bad)


def check_degree_divisibility(b: FTableBundle) -> CheckResult:
    st = "|G|_p' divides Phi_psi(1)"
    pprime = p_part(b.fusion.G.order, b.fusion.p)[1]
    degs = [f.degree.to_rational() for f in b.phi]
    ok = all(d is not None and Fraction(d).denominator == 1 and int(d) % pprime == 0 for d in degs)
    return _result("degree_divisibility", ok, st, b.fusion, g_p_prime=pprime, phi_degrees=degs)


def check_regular_decomposition(b: FTableBundle) -> CheckResult:
    st = "rho_S = sum_psi (Phi_psi(1)/[G:S]) psi with integer coefficients"
    F = b.fusion
    index = F.G.order // F.S.order
    coeffs = [Fraction(f.degree.to_rational()) / index for f in b.phi]
    integral = all(c.denominator == 1 for c in coeffs)
    coords = coordinates(regular_character(F.S), b.basis)
    ok = integral and [int(c) for c in coeffs] == coords
    return _result("regular_decomposition", ok, st, F, index=index,
                   coefficients=coeffs, rho_coordinates=coords)


def cartan_inverse_formula(b: FTableBundle) -> np.ndarray:
    """``C'[psi, mu] = sum_K psi(x_K) conj(mu(x_K)) / |C_G(x_K)|``."""
    n = b.n
    Xc = cyclo_conj_matrix(b.X)
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            out[i, j] = sum((b.X[i, k] * Xc[j, k] / b.delta[k] for k in range(n)),
                            Cyclotomic.rational(0))
    return out


def check_cartan_inverse(b: FTableBundle) -> CheckResult:
    st = "C * C' = I with C'[psi,mu] = sum_K psi(x_K) conj(mu(x_K)) / |C_G(x_K)|"
    Cp = cartan_inverse_formula(b)
    prod = b.C.dot(Cp)
    n = b.n
    ok = all(prod[i, j] == int(i == j) for i in range(n) for j in range(n))
    w = {"C": b.C, "C_prime": Cp}
    if not ok:
        w["product"] = prod
    return _result("cartan_inverse", ok, st, b.fusion, **w)


def check_cartan_inverse_integral(b: FTableBundle) -> CheckResult:
    st = "|G|_p'^2 * C^-1 is an integer matrix (S Sylow)"
    F = b.fusion
    if not F.sylow:
        return _skip("cartan_inverse_integral", st, NOT_SATURATED)
    pprime = p_part(F.G.order, F.p)[1]
    M = cartan_inverse_formula(b) * (pprime ** 2)
    bad = [(i, j) for (i, j), v in np.ndenumerate(M)
           if v.to_rational() is None or Fraction(v.to_rational()).denominator != 1]
    return _result("cartan_inverse_integral", not bad, st, F, scaled=M, non_integral=bad)


def check_det_fraction(b: FTableBundle) -> CheckResult:
    st = "|det X|^2 * det C = prod_K |C_G(x_K)|"
    rhs = _prod(b.delta)
    return _result("det_fraction", b.det_abs_sq * b.det_C == rhs, st, b.fusion,
                   det_abs_sq=b.det_abs_sq, det_C=b.det_C, prod_centralizers=rhs)


def check_cartan_coprime(b: FTableBundle) -> CheckResult:
    st = "gcd(det C, p) = 1 (S Sylow)"
    F = b.fusion
    if not F.sylow:
        return _skip("cartan_coprime", st, NOT_SATURATED)
    g = math.gcd(b.det_C, F.p)
    return _result("cartan_coprime", g == 1, st, F, det_C=b.det_C, gcd=g)


def check_conjecture_A(b: FTableBundle) -> CheckResult:
    st = ("|det X|^2 = prod_K |C_S(x_K)| = prod_K |C_G(x_K)|_p and "
          "det C = prod_K |C_G(x_K)|_p' (x_K fully centralised)")
    F = b.fusion
    prod_cs = _prod(F.s_centralizer_orders)
    w = {"det_abs_sq": b.det_abs_sq, "prod_C_S": prod_cs}
    if not F.sylow:
        res = _result("conjecture_A", b.det_abs_sq == prod_cs, st, F, **w)
        res.note = NOT_SATURATED + "; only the C_S product is compared"
        return res
    prod_p = _prod(p_part(c, F.p)[0] for c in b.delta)
    prod_pp = _prod(p_part(c, F.p)[1] for c in b.delta)
    ok = b.det_abs_sq == prod_cs == prod_p and b.det_C == prod_pp
    return _result("conjecture_A", ok, st, F, prod_C_G_p=prod_p, det_C=b.det_C,
                   prod_C_G_p_prime=prod_pp, **w)


def p_exponent(n: int, p: int) -> int | None:
    """``a`` with ``n = p^a``, or ``None`` if ``n`` is not a power of ``p``."""
    if n < 1:
        return None
    pp, rest = p_part(n, p)
    if rest != 1:
        return None
    a = 0
    while pp > 1:
        pp //= p
        a += 1
    return a


def check_power_of_p(b: FTableBundle, p: int | None = None) -> CheckResult:
    st = "|det X|^2 = p^alpha"
    p = b.fusion.p if p is None else p
    alpha = p_exponent(b.det_abs_sq, p)
    return _result("power_of_p", alpha is not None, st, b.fusion,
                   det_abs_sq=b.det_abs_sq, alpha=alpha)


def check_phi_inner_products(b: FTableBundle) -> CheckResult:
    st = "<Phi_psi, Phi_mu>_G = c_psi_mu"
    n = b.n
    bad = [(i, j) for i in range(n) for j in range(n)
           if inner_product(b.phi[i], b.phi[j]) != b.C[i, j]]
    return _result("phi_inner_products", not bad, st, b.fusion, mismatches=bad)


def check_phi_restriction(b: FTableBundle) -> CheckResult:
    st = "Phi_psi|_S = sum_mu c_psi_mu mu"
    S = b.fusion.S
    bad = []
    for i, f in enumerate(b.phi):
        lhs = restrict(f, S)
        rhs = combination([int(x) for x in b.C[i].dot(b.basis.rows)], b.basis.irr_s)
        if lhs != rhs:
            bad.append(i)
    return _result("phi_restriction", not bad, st, b.fusion, mismatches=bad)


def check_dx_restriction(b: FTableBundle) -> CheckResult:
    st = "(D X)[chi, K] = chi(x_K)"
    DX = b.D.dot(b.X)
    G = b.fusion.G
    cols = [G.class_index[rep] for rep in b.fusion.reps]
    bad = [(i, j) for i, chi in enumerate(b.irr_g.irr) for j, c in enumerate(cols)
           if DX[i, j] != chi.values[c]]
    return _result("dx_restriction", not bad, st, b.fusion, mismatches=bad)


def check_zcf_basis(b: FTableBundle) -> CheckResult:
    st = "{Phi_psi} is independent and #(G-classes of p-elements) = |cl(F)| (S Sylow)"
    F = b.fusion
    count = sum(1 for c in F.G.conjugacy_classes if p_part(c.element_order, F.p)[1] == 1)
    independent = not cyclo_det(b.P).is_zero()
    if not F.sylow:
        return _result("zcf_basis", independent, st, F, p_element_classes=count,
                       n_classes=F.n_classes)
    return _result("zcf_basis", independent and count == F.n_classes, st, F,
                   p_element_classes=count, n_classes=F.n_classes)


def check_base_change_invariance(b: FTableBundle, trials: int = 20, seed: int = 0) -> CheckResult:
    st = "|det X_B|^2 is the same for every basis B"
    rng = np.random.default_rng(seed)
    seen = []
    for _ in range(trials):
        U = random_unimodular(b.n, rng)
        seen.append(abs_sq_integer(cyclo_det(U.dot(b.X))))
    ok = all(v == b.det_abs_sq for v in seen)
    return _result("base_change_invariance", ok, st, b.fusion, trials=trials,
                   det_abs_sq=b.det_abs_sq, observed=sorted(set(seen)))


def check_product_kronecker(b1: FTableBundle, b2: FTableBundle, b12: FTableBundle) -> CheckResult:
    """Product laws for ``F1 x F2``: lattice, Kronecker table and determinant."""
    st = ("R(F1 x F2) is spanned by products B1*B2; X_{B1B2} = X_{B1} (x) X_{B2}; "
          "|det|^2 = d1^|cl(F2)| * d2^|cl(F1)|")
    F = b12.fusion
    S = F.S
    B = b12.basis
    products, X12 = [], []
    s_idx = S.class_index
    from .perm_group import project

    for psi in b1.basis.views:
        for mu in b2.basis.views:
            vals = []
            for c in S.conjugacy_classes:
                x1, x2 = project(F.G, c.representative)
                vals.append(psi(x1) * mu(x2))
            f = ClassFunction(S, tuple(vals))
            a, integral = irr_decompose(f, B.irr_s)
            if not integral:
                return _result("product_kronecker", False, st, F, reason="product not a character")
            products.append(a)
            X12.append([f.values[s_idx[rep]] for rep in F.reps])
    index = lattice_index(int_matrix(products), B.rows)
    kron = np.kron(b1.X, b2.X)
    n = len(X12)
    kron_ok = all(X12[i][j] == kron[i, j] for i in range(n) for j in range(n))
    n1, n2 = b1.n, b2.n
    expected = b1.det_abs_sq ** n2 * b2.det_abs_sq ** n1
    det_prod_basis = abs_sq_integer(cyclo_det(np.array(X12, dtype=object)))
    ok = index == 1 and kron_ok and b12.det_abs_sq == expected == det_prod_basis
    return _result("product_kronecker", ok, st, F, lattice_index=index, kronecker_equal=kron_ok,
                   det_abs_sq=b12.det_abs_sq, det_abs_sq_product_basis=det_prod_basis,
                   expected=expected)


def inner_product_decomposition(b: FTableBundle) -> np.ndarray:
    """``<chi|_S, psi>`` for comparison with the coordinate matrix ``D``."""
    S = b.fusion.S
    out = np.empty(b.D.shape, dtype=object)
    for i, chi in enumerate(b.irr_g.irr):
        r = restrict(chi, S)
        for j, psi in enumerate(b.basis.views):
            out[i, j] = inner_product(r, psi).to_rational()
    return out


ALL_CHECKS = (
    check_orthogonality,
    check_zero_off_p,
    check_degree_divisibility,
    check_regular_decomposition,
    check_cartan_inverse,
    check_cartan_inverse_integral,
    check_det_fraction,
    check_cartan_coprime,
    check_conjecture_A,
    check_power_of_p,
    check_phi_inner_products,
    check_phi_restriction,
    check_dx_restriction,
    check_zcf_basis,
    check_base_change_invariance,
)


def run_checks(b: FTableBundle) -> list[CheckResult]:
    return [check(b) for check in ALL_CHECKS]
