"""Finite fields F_{l^k} as F_l[x]/(f) for a fixed irreducible f.

Elements are coefficient tuples ``(c_0, ..., c_{k-1})``. The canonical
enumeration index of an element is ``sum(c_i * l**i)``; both the choice of
modulus and of root-of-unity images scan in this order, so the constant term
varies fastest.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

from ..errors import DomainError


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], f: list[int], ell: int) -> list[int]:
    a = _poly_trim([x % ell for x in a])
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, ell)
    while len(a) - 1 >= df:
        q = a[-1] * inv_lead % ell
        shift = len(a) - 1 - df
        for i, c in enumerate(f):
            a[shift + i] = (a[shift + i] - q * c) % ell
        _poly_trim(a)
    return a


def _monic_polys(ell: int, d: int):
    """Monic degree-d polynomials over F_l in canonical scan order."""
    for t in range(ell ** d):
        coeffs = [(t // ell ** i) % ell for i in range(d)]
        yield coeffs + [1]


@lru_cache(maxsize=None)
def irreducible_polynomial(ell: int, k: int) -> tuple[int, ...]:
    """Least monic irreducible of degree ``k`` over F_l (constant term scanned fastest)."""
    for f in _monic_polys(ell, k):
        if k == 1 or not any(
            not _poly_mod(f, g, ell)
            for d in range(1, k // 2 + 1)
            for g in _monic_polys(ell, d)
        ):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class FiniteField:
    """The field F_{l^k}."""

    def __init__(self, ell: int, k: int = 1):
        if ell < 2 or any(ell % d == 0 for d in range(2, math.isqrt(ell) + 1)):
            raise DomainError(f"{ell} is not prime")
        self.ell = ell
        self.k = k
        self.modulus = irreducible_polynomial(ell, k)
        self.order = ell ** k

    def __repr__(self) -> str:
        return f"GF({self.ell}^{self.k})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteField) and (self.ell, self.k) == (other.ell, other.k)

    def __hash__(self) -> int:
        return hash((self.ell, self.k))

    def __call__(self, value) -> "FqElement":
        if isinstance(value, FqElement):
            return value
        if isinstance(value, int):
            return FqElement(self, (value % self.ell,) + (0,) * (self.k - 1))
        coeffs = [int(c) % self.ell for c in value]
        coeffs = _poly_mod(coeffs, list(self.modulus), self.ell) if len(coeffs) > self.k else coeffs
        return FqElement(self, tuple(coeffs) + (0,) * (self.k - len(coeffs)))

    def zero(self) -> "FqElement":
        return self(0)

    def one(self) -> "FqElement":
        return self(1)

    def from_index(self, t: int) -> "FqElement":
        return FqElement(self, tuple((t // self.ell ** i) % self.ell for i in range(self.k)))

    def elements(self):
        """All elements in canonical enumeration order."""
        return (self.from_index(t) for t in range(self.order))

    def elements_of_order(self, e: int):
        """Elements of exact multiplicative order ``e``, in enumeration order."""
        if (self.order - 1) % e:
            return
        primes = _prime_factors(e)
        for x in itertools.islice(self.elements(), 1, None):
            if x ** e == self.one() and all(x ** (e // r) != self.one() for r in primes):
                yield x


class FqElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs: tuple[int, ...]):
        self.field = field
        self.coeffs = coeffs

    def _check(self, other) -> "FqElement":
        if isinstance(other, int):
            return self.field(other)
        if not isinstance(other, FqElement) or other.field != self.field:
            raise TypeError("elements of different fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        ell = self.field.ell
        return FqElement(self.field, tuple((a + b) % ell for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        ell = self.field.ell
        return FqElement(self.field, tuple(-a % ell for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        F = self.field
        prod = [0] * (2 * F.k - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        red = _poly_mod(prod, list(F.modulus), F.ell)
        return FqElement(F, tuple(red) + (0,) * (F.k - len(red)))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "FqElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in finite field")
        return self ** (self.field.order - 2)

    def __truediv__(self, other):
        return self * self._check(other).inverse()

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.field(other)
        if not isinstance(other, FqElement):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def index(self) -> int:
        return sum(c * self.field.ell ** i for i, c in enumerate(self.coeffs))

    def multiplicative_order(self) -> int:
        if self.is_zero():
            raise ZeroDivisionError("zero has no multiplicative order")
        n = self.field.order - 1
        for r in _prime_factors(n):
            while n % r == 0 and self ** (n // r) == self.field.one():
                n //= r
        return n

    def __repr__(self) -> str:
        if self.field.k == 1:
            return f"{self.coeffs[0]} (mod {self.field.ell})"
        return f"{list(self.coeffs)} in {self.field!r}"


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def multiplicative_order_mod(ell: int, e: int) -> int:
    """Least ``k >= 1`` with ``e | ell^k - 1``."""
    if math.gcd(ell, e) != 1:
        raise DomainError(f"gcd({ell}, {e}) != 1")
    if e == 1:
        return 1
    k, x = 1, ell % e
    while x != 1:
        x = x * ell % e
        k += 1
    return k


def fq_embed_root(ell: int, e: int, which: int = 0) -> tuple[int, FqElement]:
    """Smallest field F_{l^k} containing an element of order ``e``, and that element.

    ``which`` selects the ``which``-th such element in enumeration order; 0 is
    the canonical choice.
    """
    k = multiplicative_order_mod(ell, e)
    F = FiniteField(ell, k)
    for i, x in enumerate(F.elements_of_order(e)):
        if i == which:
            return k, x
    raise DomainError(f"fewer than {which + 1} elements of order {e} in {F!r}")


def fq_rank(M) -> int:
    """Rank by Gaussian elimination over the common field of the entries."""
    rows = [list(r) for r in M]
    if not rows or not rows[0]:
        return 0
    m, n = len(rows), len(rows[0])
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if not _is_zero(rows[i][col])), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][col].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            if i != r and not _is_zero(rows[i][col]):
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == m:
            break
    return r


def _is_zero(x) -> bool:
    return x.is_zero() if isinstance(x, FqElement) else x == 0
