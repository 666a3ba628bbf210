"""Permutations of {0..n-1} and fully enumerated permutation groups.

Products compose like functions: (a * b)(x) = a(b(x)), so the right factor
acts first.  Groups are stored with their complete element list, sorted by
image tuple, which keeps every derived object (orbits, conjugacy classes,
cosets) reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

import numpy as np


class GroupTooLarge(Exception):
    """Closure exceeded the configured element cap."""


class NotASubgroup(Exception):
    pass


class Permutation:
    """A bijection of {0..n-1} stored as its tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError("images must list each of 0..n-1 exactly once")
        self.images = images

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles) -> "Permutation":
        """Build from disjoint cycles given as iterables of points."""
        images = list(range(degree))
        seen = set()
        for cycle in cycles:
            cycle = list(cycle)
            for a in cycle:
                if a in seen:
                    raise ValueError(f"point {a} appears in two cycles")
                seen.add(a)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise ValueError("degrees differ")
        img = self.images
        return Permutation(tuple(img[y] for y in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation(inv)

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Permutation.identity(self.degree)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def is_identity(self) -> bool:
        return all(i == x for x, i in enumerate(self.images))

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Nontrivial cycles, each starting at its least point, sorted."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self.images[x]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return tuple(out)

    def __repr__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return f"Permutation(id on {self.degree})"
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)
        return f"Permutation{body}"


def cycle_structure(perm: Permutation) -> tuple[int, ...]:
    """Sorted multiset of all cycle lengths, fixed points included."""
    lengths = [len(c) for c in perm.cycles()]
    fixed = perm.degree - sum(lengths)
    return tuple(sorted([1] * fixed + lengths))


def element_order(perm: Permutation) -> int:
    lengths = [len(c) for c in perm.cycles()]
    return lcm(*lengths) if lengths else 1


def fixed_points(perm: Permutation) -> int:
    """Number of points i with perm(i) == i."""
    return sum(1 for x, y in enumerate(perm.images) if x == y)


class PermutationGroup:
    """A finite permutation group carrying its full sorted element list.

    Constructing one directly trusts that ``elements`` is closed; use
    close_group to enumerate from generators.
    """

    __slots__ = ("degree", "generators", "elements", "_index", "_images", "_cayley")

    def __init__(self, degree, generators, elements):
        self.degree = int(degree)
        self.generators = tuple(generators)
        self.elements = tuple(sorted(elements, key=lambda p: p.images))
        self._index = {p.images: i for i, p in enumerate(self.elements)}
        self._images = None
        self._cayley = None
        if len(self._index) != len(self.elements):
            raise ValueError("duplicate elements")
        if Permutation.identity(self.degree).images not in self._index:
            raise ValueError("identity missing")

    @classmethod
    def from_elements(cls, elements, generators=None) -> "PermutationGroup":
        elements = tuple(elements)
        if not elements:
            raise ValueError("empty element list")
        degree = elements[0].degree
        if generators is None:
            generators = elements
        return cls(degree, generators, elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, perm) -> bool:
        return isinstance(perm, Permutation) and perm.images in self._index

    def index_of(self, perm: Permutation) -> int:
        return self._index[perm.images]

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def contains_group(self, other: "PermutationGroup") -> bool:
        return other.degree == self.degree and all(
            g.images in self._index for g in other.elements
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PermutationGroup)
            and self.degree == other.degree
            and self.elements == other.elements
        )

    def __hash__(self) -> int:
        return hash((self.degree, self.elements))

    def __repr__(self) -> str:
        return f"PermutationGroup(degree={self.degree}, order={self.order})"


def _dtype_for(degree: int):
    return np.uint8 if degree <= 255 else np.uint16


def images_matrix(group_or_perms) -> np.ndarray:
    """Stack image tuples into one (count, degree) unsigned int array."""
    if isinstance(group_or_perms, PermutationGroup):
        if group_or_perms._images is None:
            dt = _dtype_for(group_or_perms.degree)
            group_or_perms._images = np.array(
                [p.images for p in group_or_perms.elements], dtype=dt
            )
        return group_or_perms._images
    perms = list(group_or_perms)
    dt = _dtype_for(perms[0].degree)
    return np.array([p.images for p in perms], dtype=dt)


def _row_view(rows: np.ndarray) -> np.ndarray:
    """View each row as one comparable void scalar (for searchsorted)."""
    rows = np.ascontiguousarray(rows)
    return rows.view([("", rows.dtype)] * rows.shape[1]).ravel()


def _row_indices(sorted_rows_view: np.ndarray, query_rows: np.ndarray) -> np.ndarray:
    """Positions of query rows inside a lexicographically sorted row array."""
    return np.searchsorted(sorted_rows_view, _row_view(query_rows))


def close_group(generators, *, cap: int = 1_000_000) -> PermutationGroup:
    """Enumerate the group generated by ``generators`` by breadth-first
    closure under left multiplication.  Raises GroupTooLarge past ``cap``."""
    gens = tuple(generators)
    if not gens:
        raise ValueError("need at least one generator")
    degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise ValueError("generators must share one degree")
    dt = _dtype_for(degree)
    gen_arr = np.array([g.images for g in gens], dtype=dt)
    ident = np.arange(degree, dtype=dt).tobytes()
    seen = {ident}
    frontier = [ident]
    while frontier:
        F = np.frombuffer(b"".join(frontier), dtype=dt).reshape(len(frontier), degree)
        products = gen_arr[:, F].reshape(-1, degree)
        frontier = []
        for row in products:
            key = row.tobytes()
            if key not in seen:
                seen.add(key)
                frontier.append(key)
        if len(seen) > cap:
            raise GroupTooLarge(f"closure exceeded cap of {cap} elements")
    elements = [Permutation(np.frombuffer(b, dtype=dt)) for b in seen]
    return PermutationGroup(degree, gens, elements)


def orbits(group, domain=None) -> list[tuple[int, ...]]:
    """Partition of the domain into orbits, each sorted, ordered by least
    point.  ``group`` may be a PermutationGroup or an iterable of
    generating permutations."""
    if isinstance(group, PermutationGroup):
        gens = group.generators or group.elements
        degree = group.degree
    else:
        gens = tuple(group)
        if not gens:
            raise ValueError("need at least one permutation")
        degree = gens[0].degree
    gen_arr = np.array([g.images for g in gens], dtype=np.int64)
    if domain is None:
        seeds = range(degree)
    else:
        seeds = sorted(set(int(x) for x in domain))
        if seeds and (seeds[0] < 0 or seeds[-1] >= degree):
            raise ValueError("domain points out of range")
    visited = np.zeros(degree, dtype=bool)
    out = []
    for seed in seeds:
        if visited[seed]:
            continue
        visited[seed] = True
        orbit = [seed]
        frontier = np.array([seed], dtype=np.int64)
        while frontier.size:
            candidates = np.unique(gen_arr[:, frontier].ravel())
            fresh = candidates[~visited[candidates]]
            visited[fresh] = True
            orbit.extend(int(x) for x in fresh)
            frontier = fresh
        out.append(tuple(sorted(orbit)))
    if domain is not None:
        allowed = set(seeds)
        for orbit in out:
            stray = [x for x in orbit if x not in allowed]
            if stray:
                raise ValueError(f"orbit escapes the given domain at {stray[0]}")
    return out


@dataclass(frozen=True, eq=False)
class ConjugacyClassSet:
    """Conjugacy classes of a group, each class sorted by image tuple and
    classes ordered by their least member, so the identity class is first."""

    group: PermutationGroup
    classes: tuple[tuple[Permutation, ...], ...]

    @property
    def representatives(self) -> tuple[Permutation, ...]:
        return tuple(c[0] for c in self.classes)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def __len__(self) -> int:
        return len(self.classes)

    def same_classes(self, other: "ConjugacyClassSet") -> bool:
        return self is other or self.classes == other.classes


def conjugacy_classes(group: PermutationGroup) -> ConjugacyClassSet:
    """Conjugacy classes by direct conjugation of each unprocessed element
    with the whole group (vectorized over the element array)."""
    E = images_matrix(group)
    n = len(group.elements)
    inv = np.argsort(E, axis=1).astype(E.dtype)
    sorted_view = _row_view(E)
    visited = np.zeros(n, dtype=bool)
    classes = []
    for idx in range(n):
        if visited[idx]:
            continue
        x = E[idx]
        # row m holds images of  g_m o x o g_m^{-1}
        conjugated = np.take_along_axis(E, x[inv], axis=1)
        members = np.unique(conjugated, axis=0)
        member_idx = _row_indices(sorted_view, members)
        visited[member_idx] = True
        classes.append(tuple(group.elements[int(k)] for k in member_idx))
    return ConjugacyClassSet(group=group, classes=tuple(classes))


def stabilizer(group: PermutationGroup, point: int) -> PermutationGroup:
    """Point stabilizer, returned with its members as generators."""
    if not 0 <= point < group.degree:
        raise ValueError("point out of range")
    members = tuple(g for g in group.elements if g.images[point] == point)
    return PermutationGroup(group.degree, members, members)


def cayley_index_table(group: PermutationGroup) -> np.ndarray:
    """table[i, j] = index of elements[i] * elements[j], as int32.  Cached
    on the group after the first call."""
    if group._cayley is not None:
        return group._cayley
    E = images_matrix(group)
    n = len(group.elements)
    sorted_view = _row_view(E)
    table = np.empty((n, n), dtype=np.int32)
    for i in range(n):
        products = E[i][E]
        table[i] = _row_indices(sorted_view, products)
    group._cayley = table
    return table


def element_order_profile(group: PermutationGroup) -> dict[int, int]:
    """Histogram {order: count} over all elements; a cheap isomorphism
    invariant for telling small groups apart."""
    profile: dict[int, int] = {}
    for g in group.elements:
        k = element_order(g)
        profile[k] = profile.get(k, 0) + 1
    return dict(sorted(profile.items()))
