"""Characters of inner groups and the regular decomposition of quandle
rings for prime connected affine quandles.

The inner group of a connected affine quandle with prime modulus p and
multiplier of order n is Z_p x| Z_n.  Its irreducible characters are the n
linear characters pulled back from Z_n together with (p-1)/n induced
characters of degree n, one per orbit of the inverse multiplier u acting on
Z_p*.  The induced character at orbit representative k takes the value
sum_a w^(u^a k j) on the translation by j (w a primitive p-th root of
unity) and vanishes off the translation subgroup.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cayley import AffineSpec
from .inner import InnerPresentation, normal_form
from .modular import is_prime, multiplicative_order
from .perms import ConjugacyClassSet, Permutation, PermutationGroup


class BadParameters(Exception):
    pass


class GroupMismatch(Exception):
    pass


class NotTransitive(Exception):
    pass


@dataclass(frozen=True, eq=False)
class ClassFunction:
    """Values on the conjugacy classes of a fixed group, in class order.
    exact=True marks integer-valued functions stored as ints."""

    classes: ConjugacyClassSet
    values: tuple
    exact: bool

    def __post_init__(self):
        if len(self.values) != len(self.classes.classes):
            raise ValueError("one value per class required")


def permutation_character(group: PermutationGroup,
                          classes: ConjugacyClassSet | None = None) -> ClassFunction:
    """Fixed-point count of a class representative, per class.  Exact."""
    from .perms import conjugacy_classes as _cc

    if classes is None:
        classes = _cc(group)
    if classes.group is not group and classes.group != group:
        raise GroupMismatch("classes belong to a different group")
    values = tuple(
        sum(1 for x, y in enumerate(rep.images) if x == y)
        for rep in classes.representatives
    )
    return ClassFunction(classes=classes, values=values, exact=True)


def trivial_character(classes: ConjugacyClassSet) -> ClassFunction:
    return ClassFunction(classes=classes, values=(1,) * len(classes.classes), exact=True)


def inner_product(a: ClassFunction, b: ClassFunction):
    """(1/|G|) sum_g a(g) conj(b(g)), summed over classes with their sizes.
    Returns an exact Fraction when both inputs are exact, else complex."""
    if not a.classes.same_classes(b.classes):
        raise GroupMismatch("class functions live on different groups")
    sizes = a.classes.sizes
    n = sum(sizes)
    if a.exact and b.exact:
        total = sum(s * av * bv for s, av, bv in zip(sizes, a.values, b.values))
        return Fraction(total, n)
    total = sum(
        s * complex(av) * complex(bv).conjugate()
        for s, av, bv in zip(sizes, a.values, b.values)
    )
    return total / n


def burnside_rank(group: PermutationGroup, *, strict: bool = False) -> int:
    """Number of orbits on ordered pairs: (1/|G|) sum_g fix(g)^2, computed
    exactly over all elements.  With strict=True a non-transitive action
    raises NotTransitive (the value itself is meaningful either way)."""
    from .perms import images_matrix, orbits

    E = images_matrix(group)
    fixed = (E == np.arange(group.degree, dtype=E.dtype)).sum(axis=1).astype(np.int64)
    total = int((fixed * fixed).sum())
    q, r = divmod(total, len(group.elements))
    if r != 0:
        raise ArithmeticError("fixed-point sum not divisible by the group order")
    if strict and len(orbits(group)) != 1:
        raise NotTransitive("action is not transitive")
    return q


# ---------------------------------------------------------------------------
# irreducible characters of Z_p x| Z_n


@dataclass(frozen=True)
class MetacyclicFamily:
    """Complete irreducible data for <a, b | a^p, b^n, b^-1 a b = a^twist>.

    Class labels: ("identity",), ("shift", j) for the classes of nontrivial
    translations (j the least element of the twist-orbit), and ("layer", i)
    for the p elements whose scaling exponent is i != 0.
    """

    prime: int
    automorphism_order: int
    twist: int
    linear_indices: tuple[int, ...]
    induced_indices: tuple[int, ...]

    def labels(self) -> tuple:
        shifts = tuple(("shift", k) for k in self.induced_indices)
        layers = tuple(("layer", i) for i in range(1, self.automorphism_order))
        return (("identity",),) + shifts + layers

    def class_size(self, label) -> int:
        if label == ("identity",):
            return 1
        if label[0] == "shift":
            return self.automorphism_order
        if label[0] == "layer":
            return self.prime
        raise ValueError(f"unknown label {label!r}")

    def irreducible_labels(self) -> tuple[str, ...]:
        linear = tuple(f"lin:{k}" for k in self.linear_indices if k != 0)
        induced = tuple(f"ind:{k}" for k in self.induced_indices)
        return ("triv",) + linear + induced

    def degree(self, irr: str) -> int:
        if irr == "triv" or irr.startswith("lin:"):
            return 1
        if irr.startswith("ind:"):
            return self.automorphism_order
        raise ValueError(f"unknown irreducible {irr!r}")

    def value(self, irr: str, label) -> complex:
        p, n, u = self.prime, self.automorphism_order, self.twist
        if irr == "triv":
            return 1 + 0j
        if irr.startswith("lin:"):
            k = int(irr.split(":")[1])
            if label == ("identity",) or label[0] == "shift":
                return 1 + 0j
            i = label[1]
            return cmath.exp(2j * cmath.pi * k * i / n)
        if irr.startswith("ind:"):
            k = int(irr.split(":")[1])
            if label == ("identity",):
                return complex(n)
            if label[0] == "layer":
                return 0j
            j = label[1]
            total = 0j
            e = k * j % p
            for _ in range(n):
                total += cmath.exp(2j * cmath.pi * e / p)
                e = e * u % p
            return total
        raise ValueError(f"unknown irreducible {irr!r}")


def conjugate_orbit(p: int, u: int, k: int) -> frozenset[int]:
    """Orbit of k under multiplication by u modulo p."""
    orbit = {k % p}
    x = k * u % p
    while x not in orbit:
        orbit.add(x)
        x = x * u % p
    return frozenset(orbit)


def inertia_group_size(p: int, n: int, u: int, k: int) -> int:
    """Order of the stabilizer in Z_p x| Z_n of the additive character
    indexed by k, computed by counting the exponents i with u^i k == k."""
    count = sum(1 for i in range(n) if pow(u, i, p) * k % p == k % p)
    return p * count


def metacyclic_irreducibles(p: int, n: int, u: int) -> MetacyclicFamily:
    """All pn irreducibles of Z_p x| Z_n; validates the parameters and the
    dimension count n * 1 + (p-1)/n * n^2 == p n."""
    if not is_prime(p):
        raise BadParameters(f"{p} is not prime")
    u %= p
    if u == 0 or multiplicative_order(u, p) != n:
        raise BadParameters(f"{u} does not have order {n} modulo {p}")
    if (p - 1) % n != 0:
        raise BadParameters("order must divide p - 1")
    seen: set[int] = set()
    induced = []
    for k in range(1, p):
        if k in seen:
            continue
        orbit = conjugate_orbit(p, u, k)
        seen |= orbit
        induced.append(min(orbit))
    induced.sort()
    family = MetacyclicFamily(
        prime=p,
        automorphism_order=n,
        twist=u,
        linear_indices=tuple(range(n)),
        induced_indices=tuple(induced),
    )
    assert n + len(induced) * n * n == p * n
    return family


def induced_matrices(p: int, n: int, u: int, k: int) -> tuple[np.ndarray, np.ndarray]:
    """Representing matrices (translation_image, scaling_image) of the
    degree-n induced representation at index k: a diagonal of p-th roots
    w^(u^a k) and the basis rotation e_a -> e_(a+1)."""
    if not is_prime(p):
        raise BadParameters(f"{p} is not prime")
    if k % p == 0:
        raise BadParameters("index must be nonzero mod p")
    if multiplicative_order(u, p) != n:
        raise BadParameters(f"{u} does not have order {n} modulo {p}")
    exponents = [pow(u, a, p) * k % p for a in range(n)]
    diag = np.diag([cmath.exp(2j * cmath.pi * e / p) for e in exponents])
    shift = np.zeros((n, n), dtype=complex)
    for a in range(n):
        shift[(a + 1) % n, a] = 1
    return diag, shift


# ---------------------------------------------------------------------------
# bridging abstract classes to the concrete inner group


def class_label(pres: InnerPresentation, g: Permutation) -> tuple:
    """Label of the conjugacy class of g in Inn of a prime affine quandle."""
    i, j = normal_form(g, pres)
    if i != 0:
        return ("layer", i)
    if j == 0:
        return ("identity",)
    p, t = pres.modulus, pres.multiplier
    return ("shift", min(conjugate_orbit(p, t, j)))


def irreducible_class_functions(
    family: MetacyclicFamily,
    pres: InnerPresentation,
    classes: ConjugacyClassSet,
) -> dict[str, ClassFunction]:
    """Each irreducible as a ClassFunction on the concrete class set."""
    if family.prime != pres.modulus:
        raise GroupMismatch("family and presentation disagree on the modulus")
    if family.twist != pres.inverse_multiplier:
        raise GroupMismatch("family twist must be the inverse multiplier")
    labels = [class_label(pres, rep) for rep in classes.representatives]
    size_check = {lab: family.class_size(lab) for lab in labels}
    for lab, cls in zip(labels, classes.classes):
        if size_check[lab] != len(cls):
            raise GroupMismatch(f"class size mismatch at {lab!r}")
    out = {}
    for irr in family.irreducible_labels():
        values = tuple(family.value(irr, lab) for lab in labels)
        if irr == "triv":
            out[irr] = ClassFunction(classes=classes, values=(1,) * len(values), exact=True)
        else:
            out[irr] = ClassFunction(classes=classes, values=values, exact=False)
    return out


@dataclass(frozen=True, eq=False)
class DecompositionResult:
    """Multiplicities of each irreducible in the regular quandle module,
    keyed 'triv', 'lin:k', 'ind:k'."""

    spec: AffineSpec
    multiplicities: dict[str, int]
    rank: int
    is_multiplicity_free: bool

    def nonzero(self) -> dict[str, int]:
        return {k: v for k, v in self.multiplicities.items() if v}


def decompose_prime_affine(spec: AffineSpec, *, tol: float = 1e-6) -> DecompositionResult:
    """Decompose the permutation module of Inn acting on a prime connected
    affine quandle.  Multiplicities come from numeric inner products and
    must sit within tol of integers; the dimension count is re-checked."""
    from .inner import inner_group, presentation
    from .perms import conjugacy_classes

    p = spec.modulus
    if not is_prime(p):
        raise BadParameters(f"modulus {p} is not prime")
    if not spec.is_connected_admissible:
        raise BadParameters("quandle is not connected")
    if p == 1 or spec.multiplier == 1:
        raise BadParameters("multiplier must act nontrivially")
    from .cayley import affine_quandle

    pres = presentation(spec)
    group = inner_group(affine_quandle(spec))
    classes = conjugacy_classes(group)
    chi = permutation_character(group, classes)
    n = spec.order_of_multiplier
    family = metacyclic_irreducibles(p, n, pres.inverse_multiplier)
    chars = irreducible_class_functions(family, pres, classes)
    multiplicities: dict[str, int] = {}
    for irr, cf in chars.items():
        val = inner_product(chi, cf)
        val = complex(val)
        m = round(val.real)
        if abs(val - m) > tol:
            raise ArithmeticError(
                f"inner product {val} for {irr} is not integral within {tol}"
            )
        multiplicities[irr] = int(m)
    total_dim = sum(m * family.degree(irr) for irr, m in multiplicities.items())
    if total_dim != p:
        raise ArithmeticError("multiplicities do not sum to the module dimension")
    rank = sum(m * m for m in multiplicities.values())
    return DecompositionResult(
        spec=spec,
        multiplicities=multiplicities,
        rank=rank,
        is_multiplicity_free=all(m <= 1 for m in multiplicities.values()),
    )
