"""Finite abelian groups as explicit permutation groups.

Supplies the raw material for the semidirect-product Gelfand tests: every
isomorphism type of a given order (as a tuple of prime-power cyclic
moduli), the full automorphism group found by enumerating generator
images, and the group of maps x -> a + f^i(x) on the underlying set,
which realizes A x| <f> together with its subgroup <f>.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod

import numpy as np

from .perms import Permutation, PermutationGroup


def _partitions(n: int) -> list[tuple[int, ...]]:
    """Partitions of n, parts weakly decreasing."""
    if n == 0:
        return [()]
    out = []

    def extend(rest, largest, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        for part in range(min(rest, largest), 0, -1):
            extend(rest - part, part, acc + [part])

    extend(n, n, [])
    return out


def _factorize(n: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def abelian_types(order: int) -> list[tuple[int, ...]]:
    """Every isomorphism type of abelian group of the given order, as a
    sorted tuple of prime-power cyclic moduli.  Order 1 gives (1,)."""
    if order < 1:
        raise ValueError("order must be positive")
    if order == 1:
        return [(1,)]
    per_prime = []
    for p, e in sorted(_factorize(order).items()):
        per_prime.append([[p**part for part in q] for q in _partitions(e)])
    types = []
    for combo in itertools.product(*per_prime):
        moduli = sorted(m for block in combo for m in block)
        types.append(tuple(moduli))
    return sorted(types)


@dataclass(frozen=True)
class AbelianGroup:
    """A direct sum of cyclic groups, elements stored as coefficient
    tuples in lexicographic order."""

    moduli: tuple[int, ...]

    def __post_init__(self):
        if not self.moduli or any(m < 1 for m in self.moduli):
            raise ValueError("moduli must be positive")

    @property
    def order(self) -> int:
        return prod(self.moduli)

    @property
    def elements(self) -> list[tuple[int, ...]]:
        return list(itertools.product(*(range(m) for m in self.moduli)))

    def index(self, element: tuple[int, ...]) -> int:
        idx = 0
        for value, modulus in zip(element, self.moduli):
            idx = idx * modulus + value % modulus
        return idx

    def add(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        return tuple((x + y) % m for x, y, m in zip(a, b, self.moduli))

    def negate(self, a: tuple[int, ...]) -> tuple[int, ...]:
        return tuple((-x) % m for x, m in zip(a, self.moduli))

    def translation(self, element: tuple[int, ...]) -> Permutation:
        """The permutation x -> x + element of the element list."""
        return Permutation(
            tuple(self.index(self.add(x, element)) for x in self.elements)
        )

    def translation_group(self) -> PermutationGroup:
        """The regular action of the group on itself, fully enumerated."""
        perms = [self.translation(e) for e in self.elements]
        gens = [self.translation(e) for e in self._standard_generators()]
        return PermutationGroup.from_elements(perms, generators=gens or perms)

    def _standard_generators(self) -> list[tuple[int, ...]]:
        gens = []
        for pos, m in enumerate(self.moduli):
            if m == 1:
                continue
            gens.append(tuple(1 if i == pos else 0 for i in range(len(self.moduli))))
        return gens


def automorphism_permutations(group: AbelianGroup) -> list[Permutation]:
    """Every automorphism, as a permutation of the element list.

    A homomorphism is fixed by the images of the standard generators; the
    image of a generator of order d must itself be killed by d.  All
    candidate image assignments are expanded to full maps in one numpy
    pass and kept when bijective.
    """
    moduli = np.array(group.moduli, dtype=np.int64)
    k = len(group.moduli)
    coords = np.array(group.elements, dtype=np.int64)
    weights = np.ones(k, dtype=np.int64)
    for i in range(k - 2, -1, -1):
        weights[i] = weights[i + 1] * moduli[i + 1]

    candidate_rows = []
    for pos, m in enumerate(group.moduli):
        ok = np.all(coords * m % moduli == 0, axis=1)
        candidate_rows.append(np.nonzero(ok)[0])
    matrices = []
    for choice in itertools.product(*candidate_rows):
        matrices.append(coords[list(choice)])
    stacked = np.array(matrices, dtype=np.int64)
    images = np.einsum("nk,ckj->cnj", coords, stacked) % moduli
    indices = images @ weights
    sorted_rows = np.sort(indices, axis=1)
    bijective = np.all(sorted_rows == np.arange(group.order, dtype=np.int64), axis=1)
    return [
        Permutation(tuple(int(v) for v in row))
        for row, good in zip(indices, bijective)
        if good
    ]


def automorphism_group(group: AbelianGroup) -> PermutationGroup:
    """Aut(A) acting on the element list, fully enumerated."""
    perms = automorphism_permutations(group)
    return PermutationGroup.from_elements(perms)


def abelian_affine_quandle(group: AbelianGroup, automorphism: Permutation):
    """The quandle x > y = f(x) + y - f(y) on the group's element list.

    Connected exactly when id - f is bijective; its inner group is then
    the extension built by affine_extension with the point stabilizer the
    cyclic subgroup generated by f.
    """
    from .cayley import validate_quandle

    count = group.order
    if automorphism.degree != count:
        raise ValueError("automorphism degree must match the group order")
    elements = group.elements
    f = automorphism.images
    table = []
    for x in range(count):
        fx = elements[f[x]]
        row = []
        for y in range(count):
            drift = group.add(elements[y], group.negate(elements[f[y]]))
            row.append(group.index(group.add(fx, drift)))
        table.append(row)
    return validate_quandle(table)


def affine_extension(
    group: AbelianGroup, automorphism: Permutation
) -> tuple[PermutationGroup, PermutationGroup]:
    """The holomorph-style group of maps x -> a + f^i(x) together with the
    cyclic subgroup generated by f.

    Element count is |A| * order(f); the pair realizes (A x| <f>, <f>)
    acting on A.
    """
    count = group.order
    if automorphism.degree != count:
        raise ValueError("automorphism degree must match the group order")
    elements = group.elements
    add_table = np.empty((count, count), dtype=np.int64)
    for i, a in enumerate(elements):
        add_table[i] = [group.index(group.add(a, x)) for x in elements]

    powers = [Permutation.identity(count)]
    current = automorphism
    while not current.is_identity():
        powers.append(current)
        current = current * automorphism

    members = []
    for a_idx in range(count):
        row = add_table[a_idx]
        for f_power in powers:
            members.append(Permutation(tuple(int(row[y]) for y in f_power.images)))
    gens = [group.translation(g) for g in group._standard_generators()]
    gens.append(automorphism)
    big = PermutationGroup.from_elements(members, generators=gens)
    small = PermutationGroup.from_elements(powers, generators=[automorphism])
    return big, small
