"""Inner automorphism groups of quandles.

For a connected affine quandle (m, t) the inner group is generated by two
elements: the translation x -> x + (1 - t) and the scaling x -> t x, with
scaling * translation * scaling^-1 == translation^t.  Every inner
automorphism is an affine map x -> t^i x + j (1 - t); the pair (i, j) is
its normal form, read in application order (scale i times, then shift j
times).
"""

from __future__ import annotations

from dataclasses import dataclass

from .cayley import AffineSpec, CayleyQuandle, affine_quandle, right_translation
from .modular import geometric_sum
from .perms import (
    Permutation,
    PermutationGroup,
    close_group,
    element_order,
    orbits,
)


class NotInGroup(Exception):
    pass


class RelationFailure(Exception):
    pass


def inner_generators(q: CayleyQuandle) -> tuple[Permutation, ...]:
    """All right translations R_y, one per element."""
    return tuple(right_translation(q, y) for y in range(q.order))


def inner_group(q: CayleyQuandle, *, cap: int = 1_000_000) -> PermutationGroup:
    """The group generated by the right translations."""
    return close_group(inner_generators(q), cap=cap)


def is_connected(q: CayleyQuandle) -> bool:
    """True when the inner group acts transitively (one orbit of the
    translation generators suffices to decide this)."""
    return len(orbits(inner_generators(q))) == 1


@dataclass(frozen=True)
class InnerPresentation:
    """Verified two-generator data for Inn of a connected affine quandle."""

    spec: AffineSpec
    translation: Permutation  # x -> x + (1 - t), order m
    scaling: Permutation      # x -> t x, order n

    @property
    def modulus(self) -> int:
        return self.spec.modulus

    @property
    def multiplier(self) -> int:
        return self.spec.multiplier

    @property
    def scaling_order(self) -> int:
        return self.spec.order_of_multiplier

    @property
    def inverse_multiplier(self) -> int:
        return self.spec.inverse_multiplier


def presentation(spec: AffineSpec) -> InnerPresentation:
    """Build and verify the presentation.  Checks that the translation is
    the composite R_1 * R_0^(n-1), that the generator orders are m and n,
    and that conjugating the translation by the scaling raises it to the
    power t.  Raises RelationFailure if any check fails."""
    if not spec.is_connected_admissible:
        raise ValueError(f"(m={spec.modulus}, t={spec.multiplier}) is not connected")
    m, t = spec.modulus, spec.multiplier
    n = spec.order_of_multiplier
    scaling = Permutation((t * x) % m for x in range(m))
    translation = Permutation((x + 1 - t) % m for x in range(m))
    q = affine_quandle(spec)
    composite = right_translation(q, 1 % m) * scaling ** (n - 1)
    if composite != translation:
        raise RelationFailure("translation is not R_1 * R_0^(n-1)")
    if element_order(translation) != m:
        raise RelationFailure("translation order is not the modulus")
    if element_order(scaling) != n:
        raise RelationFailure("scaling order is wrong")
    if scaling * translation * scaling.inverse() != translation ** t:
        raise RelationFailure("conjugation relation fails")
    return InnerPresentation(spec=spec, translation=translation, scaling=scaling)


def element_from_normal_form(pres: InnerPresentation, i: int, j: int) -> Permutation:
    """The affine map x -> t^i x + j (1 - t): scale i times, then shift j."""
    m, t = pres.modulus, pres.multiplier
    a = pow(t, i % pres.scaling_order, m)
    b = (j * (1 - t)) % m
    return Permutation((a * x + b) % m for x in range(m))


def normal_form(g: Permutation, pres: InnerPresentation) -> tuple[int, int]:
    """Unique (i, j) with 0 <= i < n, 0 <= j < m representing g; raises
    NotInGroup when g is not an affine map of the right shape."""
    m, t, n = pres.modulus, pres.multiplier, pres.scaling_order
    if g.degree != m:
        raise NotInGroup("degree mismatch")
    if m == 1:
        return (0, 0)
    b = g.images[0]
    a = (g.images[1] - b) % m
    power, i = 1, None
    for k in range(n):
        if power == a:
            i = k
            break
        power = power * t % m
    if i is None:
        raise NotInGroup("linear part is not a power of the multiplier")
    if any(g.images[x] != (a * x + b) % m for x in range(m)):
        raise NotInGroup("not an affine map")
    j = b * pow((1 - t) % m, -1, m) % m
    return (i, j)


def translation_power_exponents(pres: InnerPresentation, j: int, k: int) -> tuple[int, int]:
    """Normal form of R_j^k via the geometric sum: the k-th power of the
    translation at j is the map x -> t^k x + j (1 + t + ... + t^(k-1)) (1-t),
    i.e. normal form (k mod n, j * sum mod m)."""
    m, t = pres.modulus, pres.multiplier
    return (k % pres.scaling_order, j * geometric_sum(t, k, m) % m)


def verify_translation_class(spec: AffineSpec, k: int) -> bool:
    """Whether {R_j^k : j} coincides with the full layer of elements whose
    scaling exponent is k, i.e. {normal form (k mod n, j) : j}.  Holds for
    prime moduli whenever n does not divide k; fails in general for
    composite moduli."""
    pres = presentation(spec)
    q = affine_quandle(spec)
    m = spec.modulus
    powers = {right_translation(q, j) ** k for j in range(m)}
    layer = {element_from_normal_form(pres, k, j) for j in range(m)}
    return powers == layer
