"""Finite permutation groups by explicit enumeration.

Groups here are small (a few thousand elements at most in practice), so every
group keeps its full element list. Products follow the right-action convention
used by GAP: ``i^(a*b) = (i^a)^b``, i.e. ``a`` is applied first.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import CapacityError, DomainError

DEFAULT_CAP = 200_000


class Permutation(tuple):
    """A permutation of ``{0, ..., n-1}`` stored as its tuple of images.

    Internally points are zero-based; :attr:`images` and the cycle notation
    use the one-based labels of the input format. Tuple comparison gives the
    canonical (lexicographic on images) element order.
    """

    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_images(cls, images: Sequence[int]) -> "Permutation":
        """Build from one-based images ``images[i] = image of point i+1``."""
        perm = cls(i - 1 for i in images)
        if sorted(perm) != list(range(len(perm))):
            raise DomainError(f"images {list(images)} do not form a bijection")
        return perm

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], degree: int) -> "Permutation":
        """Build from one-based disjoint (or not) cycles, composed left to right."""
        result = cls.identity(degree)
        for cycle in cycles:
            img = list(range(degree))
            seen = set()
            for a in cycle:
                if not 1 <= a <= degree:
                    raise DomainError(f"point {a} outside 1..{degree}")
                if a in seen:
                    raise DomainError(f"point {a} repeated in cycle {tuple(cycle)}")
                seen.add(a)
            for a, b in zip(cycle, list(cycle[1:]) + list(cycle[:1])):
                img[a - 1] = b - 1
            result = result * cls(img)
        return result

    @property
    def degree(self) -> int:
        return len(self)

    @property
    def images(self) -> tuple[int, ...]:
        """One-based images of the points ``1..n``."""
        return tuple(i + 1 for i in self)

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(other[i] for i in self)

    def __rmul__(self, other):
        return NotImplemented

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, j in enumerate(self):
            inv[j] = i
        return Permutation(inv)

    __invert__ = inverse

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(len(self))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self, g: "Permutation") -> "Permutation":
        """Return ``g^-1 * self * g``."""
        return g.inverse() * self * g

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, one-based, each starting at its least point."""
        seen = [False] * len(self)
        out = []
        for start in range(len(self)):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i + 1)
                i = self[i]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self) -> str:
        return f"Permutation({self})"


@dataclass(frozen=True)
class ConjClass:
    representative: Permutation
    members: frozenset
    centralizer_order: int

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def element_order(self) -> int:
        return self.representative.order()


class PermGroup:
    """A permutation group with all of its elements enumerated.

    ``parent`` records the enclosing group for subgroups; ``factors`` records
    the two groups of an external direct product.
    """

    def __init__(
        self,
        degree: int,
        generators: Iterable[Permutation],
        *,
        parent: "PermGroup | None" = None,
        name: str | None = None,
        cap: int = DEFAULT_CAP,
        elements: Iterable[Permutation] | None = None,
    ):
        self.degree = degree
        self.generators = [Permutation(g) for g in generators]
        for g in self.generators:
            if len(g) != degree:
                raise DomainError(f"generator {g} has degree {len(g)}, expected {degree}")
        self.parent = parent
        self.name = name
        self.cap = cap
        self.factors: tuple[PermGroup, PermGroup] | None = None
        if elements is None:
            elements = _closure(degree, self.generators, cap)
        self.elements: list[Permutation] = sorted(Permutation(x) for x in elements)
        self._index = {x: i for i, x in enumerate(self.elements)}
        if parent is not None:
            missing = [x for x in self.generators if x not in parent]
            if missing:
                raise DomainError(f"generators {[str(m) for m in missing]} not in parent group")

    def __repr__(self) -> str:
        label = self.name or "PermGroup"
        return f"<{label} of order {self.order} on {self.degree} points>"

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return tuple(x) in self._index

    def __iter__(self):
        return iter(self.elements)

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def index_of(self, x) -> int:
        return self._index[tuple(x)]

    def subgroup(self, generators: Iterable[Permutation], name: str | None = None) -> "PermGroup":
        return PermGroup(self.degree, generators, parent=self, name=name, cap=self.cap)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        g = self
        while g is not None:
            if g is other:
                return True
            g = g.parent
        return False

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*(c.element_order for c in self.conjugacy_classes))

    @cached_property
    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for a in gens for b in gens)

    @cached_property
    def conjugacy_classes(self) -> list[ConjClass]:
        """Classes sorted by representative; the identity class comes first."""
        gens = [(g, g.inverse()) for g in self.generators]
        seen: set = set()
        classes = []
        for x in self.elements:
            if x in seen:
                continue
            orbit = {x}
            queue = deque([x])
            while queue:
                y = queue.popleft()
                for g, ginv in gens:
                    z = ginv * y * g
                    if z not in orbit:
                        orbit.add(z)
                        queue.append(z)
            seen |= orbit
            classes.append(ConjClass(min(orbit), frozenset(orbit), self.order // len(orbit)))
        classes.sort(key=lambda c: c.representative)
        return classes

    @cached_property
    def class_index(self) -> dict:
        """Map each element to the index of its conjugacy class."""
        return {x: i for i, c in enumerate(self.conjugacy_classes) for x in c.members}

    @cached_property
    def inverse_classes(self) -> list[int]:
        idx = self.class_index
        return [idx[c.representative.inverse()] for c in self.conjugacy_classes]

    def power_map(self, k: int) -> list[int]:
        """Class index of ``rep**k`` for each class."""
        idx = self.class_index
        return [idx[c.representative ** k] for c in self.conjugacy_classes]

    def centralizer_order(self, x) -> int:
        x = Permutation(x)
        if x not in self:
            raise DomainError(f"{x} is not an element of {self!r}")
        return self.conjugacy_classes[self.class_index[x]].centralizer_order

    def centralizer(self, x) -> list[Permutation]:
        x = Permutation(x)
        return [g for g in self.elements if g * x == x * g]

    def normalizer(self, sub: "PermGroup") -> list[Permutation]:
        members = set(sub.elements)
        return [
            g for g in self.elements
            if all(h.conjugate(g) in members for h in sub.generators)
        ]


def _closure(degree: int, generators: list[Permutation], cap: int) -> set:
    ident = Permutation.identity(degree)
    elements = {ident}
    queue = deque([ident])
    gens = [g for g in generators if not g.is_identity()]
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x * g
            if y not in elements:
                elements.add(y)
                if len(elements) > cap:
                    raise CapacityError(f"group order exceeds enumeration cap {cap}")
                queue.append(y)
    return elements


_CYCLE = re.compile(r"\(([^()]*)\)")


def _parse_generator(token: str) -> list[list[int]]:
    token = token.strip()
    if not token:
        raise DomainError("empty generator")
    rest = _CYCLE.sub("", token)
    if rest.strip():
        raise DomainError(f"malformed cycle syntax: {token!r}")
    cycles = []
    for body in _CYCLE.findall(token):
        parts = [s for s in re.split(r"[\s,]+", body.strip()) if s]
        try:
            cycles.append([int(s) for s in parts])
        except ValueError:
            raise DomainError(f"malformed cycle syntax: {token!r}") from None
    return cycles


def _split_generators(line: str) -> list[str]:
    # commas between ")" and "(" separate generators; commas inside cycles do not
    out, depth, cur = [], 0, []
    for ch in line:
        if ch == "(":
            if depth:
                raise DomainError(f"malformed cycle syntax: nested parenthesis in {line!r}")
            depth = 1
        elif ch == ")":
            if not depth:
                raise DomainError(f"malformed cycle syntax: unmatched ')' in {line!r}")
            depth = 0
        if ch in ",;" and not depth:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise DomainError(f"malformed cycle syntax: unclosed '(' in {line!r}")
    out.append("".join(cur))
    return [t for t in out if t.strip()]


def parse_permutations(text: str, degree: int | None = None) -> tuple[int, list[Permutation]]:
    """Parse a group-description document into ``(degree, generators)``.

    The document has an optional ``degree: n`` header followed by generators
    in disjoint-cycle notation, one or more per line (comma separated).
    """
    header_degree = None
    gen_cycles = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.fullmatch(r"degree\s*:\s*(\S+)", line, flags=re.IGNORECASE)
        if m:
            if header_degree is not None or gen_cycles:
                raise DomainError("degree header must appear once, before generators")
            try:
                header_degree = int(m.group(1))
            except ValueError:
                raise DomainError(f"bad degree {m.group(1)!r}") from None
            if header_degree < 1:
                raise DomainError("degree must be positive")
            continue
        gen_cycles.extend(_parse_generator(tok) for tok in _split_generators(line))

    if header_degree is not None and degree is not None and header_degree != degree:
        raise DomainError(f"inconsistent degree: header says {header_degree}, caller {degree}")
    n = header_degree if header_degree is not None else degree
    max_point = max((a for cycles in gen_cycles for c in cycles for a in c), default=1)
    if n is None:
        n = max_point
    if max_point > n:
        raise DomainError(f"inconsistent degree: point {max_point} exceeds degree {n}")
    return n, [Permutation.from_cycles(cycles, n) for cycles in gen_cycles]


def parse_group(text: str, degree: int | None = None, *, cap: int = DEFAULT_CAP,
                parent: PermGroup | None = None, name: str | None = None) -> PermGroup:
    n, gens = parse_permutations(text, degree)
    if parent is not None and parent.degree != n:
        raise DomainError(f"inconsistent degree: {n} vs parent degree {parent.degree}")
    return PermGroup(n, gens, cap=cap, parent=parent, name=name)


def conjugacy_classes(G: PermGroup) -> list[ConjClass]:
    return G.conjugacy_classes


def centralizer_order(G: PermGroup, x) -> int:
    return G.centralizer_order(x)


def p_part(n: int, p: int) -> tuple[int, int]:
    """Split ``n`` as ``(p-part, p'-part)``."""
    if n < 1:
        raise DomainError("n must be positive")
    pp = 1
    while n % p == 0:
        n //= p
        pp *= p
    return pp, n


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def is_p_element(G: PermGroup, x, p: int) -> bool:
    x = Permutation(x)
    if x not in G:
        raise DomainError(f"{x} is not an element of {G!r}")
    return p_part(x.order(), p)[1] == 1


def is_p_group(G: PermGroup, p: int) -> bool:
    return p_part(G.order, p)[1] == 1


def sylow_subgroup(G: PermGroup, p: int) -> PermGroup:
    """A Sylow ``p``-subgroup, grown one factor of ``p`` at a time inside normalizers."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    target = p_part(G.order, p)[0]
    P = G.subgroup([], name=f"Sylow{p}")
    while P.order < target:
        members = set(P.elements)
        for g in G.normalizer(P):
            if g not in members and g ** p in members:
                P = G.subgroup(P.generators + [g], name=f"Sylow{p}")
                break
        else:  # pragma: no cover - Sylow theory guarantees an extension
            raise RuntimeError("failed to extend p-subgroup")
    return P


def direct_product(G1: PermGroup, G2: PermGroup, *, cap: int | None = None) -> PermGroup:
    """External direct product acting on ``1..n1`` and ``n1+1..n1+n2``."""
    cap = min(G1.cap, G2.cap) if cap is None else cap
    if G1.order * G2.order > cap:
        raise CapacityError(f"product order {G1.order * G2.order} exceeds cap {cap}")
    n1, n2 = G1.degree, G2.degree
    gens = [Permutation(tuple(g) + tuple(range(n1, n1 + n2))) for g in G1.generators]
    gens += [Permutation(tuple(range(n1)) + tuple(i + n1 for i in g)) for g in G2.generators]
    elements = [pair_element(a, b) for a in G1.elements for b in G2.elements]
    name = f"{G1.name or 'G1'} x {G2.name or 'G2'}"
    P = PermGroup(n1 + n2, gens, name=name, cap=cap, elements=elements)
    P.factors = (G1, G2)
    return P


def pair_element(a: Permutation, b: Permutation) -> Permutation:
    n1 = len(a)
    return Permutation(tuple(a) + tuple(i + n1 for i in b))


def project(P: PermGroup, x) -> tuple[Permutation, Permutation]:
    """Split an element of a direct product into its two coordinates."""
    if P.factors is None:
        raise DomainError("group was not built by direct_product")
    n1 = P.factors[0].degree
    return Permutation(x[:n1]), Permutation(i - n1 for i in x[n1:])


def product_subgroup(P: PermGroup, H1: PermGroup, H2: PermGroup) -> PermGroup:
    """``H1 x H2`` as a subgroup of the direct product ``P`` of their parents."""
    gens = [pair_element(a, P.factors[1].identity) for a in H1.generators]
    gens += [pair_element(P.factors[0].identity, b) for b in H2.generators]
    elements = [pair_element(a, b) for a in H1.elements for b in H2.elements]
    name = f"{H1.name or 'H1'} x {H2.name or 'H2'}"
    H = PermGroup(P.degree, gens, parent=P, name=name, cap=P.cap, elements=elements)
    H.factors = (H1, H2)
    return H
