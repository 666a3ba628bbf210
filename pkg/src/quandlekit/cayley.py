"""Finite quandles as explicit Cayley tables.

Tables are oriented so that table[x][y] = x > y (right action), hence the
right translation by y is the column map x -> table[x][y].  All constructors
run the full axiom check before returning.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .modular import multiplicative_order
from .perms import Permutation, close_group

_AXIOM_NAMES = {
    1: "idempotence",
    2: "right invertibility",
    3: "right self-distributivity",
}


class QuandleError(Exception):
    pass


class AxiomViolation(QuandleError):
    """One of the three quandle axioms fails; carries the first witness.

    axiom 1: x > x != x, witness (x,)
    axiom 2: some column is not a bijection, witness (y,)
    axiom 3: (x>y)>z != (x>z)>(y>z), witness (x, y, z)
    """

    def __init__(self, axiom: int, witness):
        self.axiom = axiom
        self.witness = tuple(witness)
        super().__init__(
            f"axiom {axiom} ({_AXIOM_NAMES[axiom]}) fails at {self.witness}"
        )


class NotAUnit(QuandleError):
    pass


class NotAutomorphism(QuandleError):
    pass


class NotCentralized(QuandleError):
    pass


@dataclass(frozen=True)
class CayleyQuandle:
    """An n x n Cayley table over {0..n-1}; build via validate_quandle."""

    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(tuple(int(v) for v in row) for row in self.table))

    @property
    def order(self) -> int:
        return len(self.table)

    def op(self, x: int, y: int) -> int:
        return self.table[x][y]

    def __repr__(self) -> str:
        return f"CayleyQuandle(order={self.order})"


def validate_quandle(table) -> CayleyQuandle:
    """Check shape, entry range and the three axioms; raise AxiomViolation
    with the first witness found, in axiom order."""
    rows = tuple(tuple(int(v) for v in row) for row in table)
    n = len(rows)
    if n == 0:
        raise ValueError("empty table")
    for x, row in enumerate(rows):
        if len(row) != n:
            raise ValueError(f"row {x} has length {len(row)}, expected {n}")
        for y, v in enumerate(row):
            if not 0 <= v < n:
                raise ValueError(f"entry at ({x}, {y}) is {v}, outside 0..{n - 1}")
    for x in range(n):
        if rows[x][x] != x:
            raise AxiomViolation(1, (x,))
    for y in range(n):
        if len({rows[x][y] for x in range(n)}) != n:
            raise AxiomViolation(2, (y,))
    for x in range(n):
        rx = rows[x]
        for y in range(n):
            xy = rx[y]
            for z in range(n):
                if rows[xy][z] != rows[rx[z]][rows[y][z]]:
                    raise AxiomViolation(3, (x, y, z))
    return CayleyQuandle(rows)


@dataclass(frozen=True)
class AffineSpec:
    """Parameters (m, t) of the affine quandle x > y = t x + (1 - t) y mod m.

    The multiplier is normalized mod m and must be a unit.  The quandle is
    connected exactly when 1 - t is also a unit."""

    modulus: int
    multiplier: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be at least 1")
        t = self.multiplier % self.modulus
        object.__setattr__(self, "multiplier", t)
        if gcd(t, self.modulus) != 1:
            raise NotAUnit(f"{t} is not a unit modulo {self.modulus}")

    @property
    def order_of_multiplier(self) -> int:
        return multiplicative_order(self.multiplier, self.modulus)

    @property
    def inverse_multiplier(self) -> int:
        if self.modulus == 1:
            return 0
        return pow(self.multiplier, -1, self.modulus)

    @property
    def is_connected_admissible(self) -> bool:
        return gcd(1 - self.multiplier, self.modulus) == 1


def affine_quandle(spec: AffineSpec) -> CayleyQuandle:
    m, t = spec.modulus, spec.multiplier
    c = (1 - t) % m
    return validate_quandle(
        [[(t * x + c * y) % m for y in range(m)] for x in range(m)]
    )


def trivial_quandle(n: int) -> CayleyQuandle:
    """x > y = x for all x, y."""
    if n < 1:
        raise ValueError("order must be at least 1")
    return validate_quandle([[x] * n for x in range(n)])


def dihedral_quandle(n: int) -> CayleyQuandle:
    """Reflections of the n-gon: x > y = 2y - x mod n."""
    if n < 1:
        raise ValueError("order must be at least 1")
    return validate_quandle([[(2 * y - x) % n for y in range(n)] for x in range(n)])


def right_translation(q: CayleyQuandle, y: int) -> Permutation:
    """The column permutation x -> x > y."""
    if not 0 <= y < q.order:
        raise ValueError("element out of range")
    return Permutation(q.table[x][y] for x in range(q.order))


def left_division(q: CayleyQuandle, x: int, y: int) -> int:
    """The unique z with z > y = x."""
    col = [q.table[z][y] for z in range(q.order)]
    return col.index(x)


def is_latin(q: CayleyQuandle) -> bool:
    """True when every row map x -> y > x is also a bijection."""
    n = q.order
    return all(len(set(row)) == n for row in q.table)


def is_fixed_point_free(perm: Permutation, base_point: int = 0) -> bool:
    """True when perm fixes nothing outside the base point, the relevant
    notion for a group automorphism (which always fixes the identity).
    For an affine quandle this holds for the translation R_0 exactly when
    the quandle is latin."""
    return all(y != x for x, y in enumerate(perm.images) if x != base_point)


def coset_quandle(group, subgroup_generators, automorphism) -> CayleyQuandle:
    """Quandle on the right cosets Hx of a permutation group G.

    ``automorphism`` maps every element of G to its image (a dict); it must
    be a bijective homomorphism fixing the subgroup H generated by
    ``subgroup_generators`` pointwise.  The operation is
    Hx > Hy = H phi(x y^-1) y.  Cosets are indexed by their least member.
    """
    elements = set(group.elements)
    if set(automorphism) != elements:
        raise NotAutomorphism("map must be defined on exactly the group elements")
    if set(automorphism.values()) != elements:
        raise NotAutomorphism("map is not a bijection onto the group")
    for g in group.generators:
        pg = automorphism[g]
        for x in group.elements:
            if automorphism[g * x] != pg * automorphism[x]:
                raise NotAutomorphism(f"not multiplicative at ({g!r}, {x!r})")
    sub_gens = tuple(subgroup_generators)
    for h in sub_gens:
        if h not in group:
            raise ValueError("subgroup generator outside the group")
    if sub_gens:
        subgroup = close_group(sub_gens)
        members = subgroup.elements
    else:
        members = (group.identity(),)
    for h in members:
        if automorphism[h] != h:
            raise NotCentralized(f"map moves subgroup element {h!r}")

    coset_index: dict[tuple, int] = {}
    reps: list[Permutation] = []
    for g in group.elements:
        if g.images in coset_index:
            continue
        coset = sorted((h * g for h in members), key=lambda p: p.images)
        idx = len(reps)
        reps.append(coset[0])
        for member in coset:
            coset_index[member.images] = idx

    k = len(reps)
    table = [[0] * k for _ in range(k)]
    for a in range(k):
        xa = reps[a]
        for b in range(k):
            xb = reps[b]
            z = automorphism[xa * xb.inverse()] * xb
            table[a][b] = coset_index[z.images]
    return validate_quandle(table)
