"""Whole-quandle analysis: one report object combining connectivity,
inner-group data, tensor classes, multiplicity-freeness, the Gelfand-pair
verdict, and (for prime affine inputs) the module decomposition.

Also houses a small exact isomorphism search used to recognize affine
quandles among user-supplied tables of modest order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cayley import AffineSpec, CayleyQuandle, affine_quandle, right_translation
from .characters import BadParameters, burnside_rank, decompose_prime_affine
from .gelfand import is_gelfand_pair, is_multiplicity_free
from .inner import inner_group, is_connected
from .modular import is_prime, units
from .perms import cycle_structure, stabilizer
from .tensor import tau_quotient, tensor_square

RECOGNITION_CAP = 13


def _element_signature(quandle: CayleyQuandle, x: int):
    """Isomorphism-invariant fingerprint of one element: the cycle type of
    its right translation and the fiber profile of its row."""
    column = cycle_structure(right_translation(quandle, x))
    row = quandle.table[x]
    fibers: dict[int, int] = {}
    for v in row:
        fibers[v] = fibers.get(v, 0) + 1
    return column, tuple(sorted(fibers.values()))


def quandles_isomorphic(first: CayleyQuandle,
                        second: CayleyQuandle) -> tuple[int, ...] | None:
    """Image tuple of an isomorphism from first to second, or None.

    Backtracking over images with forward propagation: every assigned pair
    (a, b) forces sigma(a ? b) for both operand orders, so contradictions
    surface long before the map is total.
    """
    n = first.order
    if second.order != n:
        return None
    sig_first = [_element_signature(first, x) for x in range(n)]
    sig_second = [_element_signature(second, x) for x in range(n)]
    candidates = [
        [y for y in range(n) if sig_second[y] == sig_first[x]] for x in range(n)
    ]
    if any(not c for c in candidates):
        return None

    t1, t2 = first.table, second.table

    def propagate(sigma, used, x, y):
        """Assign sigma[x] = y and close under the operation; False on
        contradiction.  Mutates sigma and used."""
        queue = [(x, y)]
        while queue:
            a, b = queue.pop()
            if sigma[a] == b:
                continue
            if sigma[a] != -1 or used[b]:
                return False
            if sig_first[a] != sig_second[b]:
                return False
            sigma[a] = b
            used[b] = True
            for c in range(n):
                d = sigma[c]
                if d == -1:
                    continue
                queue.append((t1[a][c], t2[b][d]))
                queue.append((t1[c][a], t2[d][b]))
        return True

    def search(sigma, used):
        best = -1
        best_options = None
        for x in range(n):
            if sigma[x] != -1:
                continue
            options = [y for y in candidates[x] if not used[y]]
            if best_options is None or len(options) < len(best_options):
                best, best_options = x, options
                if len(options) <= 1:
                    break
        if best_options is None:
            return True
        for y in best_options:
            trial_sigma = sigma[:]
            trial_used = used[:]
            if propagate(trial_sigma, trial_used, best, y) and search(
                trial_sigma, trial_used
            ):
                sigma[:] = trial_sigma
                used[:] = trial_used
                return True
        return False

    sigma = [-1] * n
    used = [False] * n
    if search(sigma, used):
        return tuple(sigma)
    return None


def recognize_affine(quandle: CayleyQuandle,
                     cap: int = RECOGNITION_CAP) -> AffineSpec | None:
    """Search all affine quandles of the same order for an isomorphic
    table.  Returns the first matching spec in multiplier order, or None.
    Orders above the cap are not searched (the caller reports 'unknown')."""
    m = quandle.order
    if m > cap:
        return None
    for t in units(m):
        candidate = affine_quandle(AffineSpec(m, t))
        if quandles_isomorphic(quandle, candidate) is not None:
            return AffineSpec(m, t)
    return None


@dataclass(frozen=True, eq=False)
class AnalysisReport:
    """Everything the pipeline can say about one quandle.

    Fields that only make sense for connected quandles (multiplicity_free,
    gelfand_pair) are None otherwise; decomposition is present only for
    prime affine inputs with a nontrivial multiplier.
    """

    source: str
    order: int
    connected: bool
    latin: bool
    inner_order: int
    stabilizer_order: int
    rank: int
    translation_cycle_type: tuple[int, ...]
    translation_cycles_uniform: bool
    tensor_class_count: int
    tensor_representatives: tuple[tuple[int, int], ...]
    tensor_sizes: tuple[int, ...]
    tau_class_count: int
    multiplicity_free: bool | None
    commutation_witness: str | None
    gelfand_pair: bool | None
    affine_status: str
    affine_modulus: int | None
    affine_multiplier: int | None
    decomposition: dict[str, int] | None
    tool_version: str

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "tool_version": self.tool_version,
            "source": self.source,
            "order": self.order,
            "connected": self.connected,
            "latin": self.latin,
            "inner_order": self.inner_order,
            "stabilizer_order": self.stabilizer_order,
            "rank": self.rank,
            "translation_cycle_type": list(self.translation_cycle_type),
            "translation_cycles_uniform": self.translation_cycles_uniform,
            "tensor_class_count": self.tensor_class_count,
            "tensor_representatives": [list(p) for p in self.tensor_representatives],
            "tensor_sizes": list(self.tensor_sizes),
            "tau_class_count": self.tau_class_count,
            "multiplicity_free": self.multiplicity_free,
            "commutation_witness": self.commutation_witness,
            "gelfand_pair": self.gelfand_pair,
            "affine_status": self.affine_status,
            "affine_modulus": self.affine_modulus,
            "affine_multiplier": self.affine_multiplier,
            "decomposition": self.decomposition,
        }


def analyze(
    quandle: CayleyQuandle,
    *,
    spec: AffineSpec | None = None,
    source: str = "table",
    include_gelfand: bool = True,
    include_decomposition: bool = True,
    recognition_cap: int = RECOGNITION_CAP,
    tol: float = 1e-6,
) -> AnalysisReport:
    """Run the full pipeline on one quandle.

    When the quandle came from an affine spec, pass it so the report can
    skip recognition and attach the exact decomposition where the
    metacyclic character family applies.
    """
    from . import __version__
    from .cayley import is_latin

    order = quandle.order
    group = inner_group(quandle)
    connected = is_connected(quandle)
    latin = is_latin(quandle)
    stab = stabilizer(group, 0)
    rank = burnside_rank(group)
    cycles = cycle_structure(right_translation(quandle, 0))
    nontrivial = [c for c in cycles if c > 1]
    uniform = len(set(nontrivial)) <= 1

    ts = tensor_square(quandle)
    tq = tau_quotient(ts)

    mf_value = None
    witness_text = None
    gelfand_value = None
    if connected:
        verdict = is_multiplicity_free(quandle, ts)
        mf_value = verdict.value
        if verdict.witness is not None:
            witness_text = verdict.witness.describe()
        if include_gelfand:
            gelfand_value = is_gelfand_pair(group, stab)

    if spec is not None:
        affine_status = "given"
        matched = spec
    else:
        if order <= recognition_cap:
            matched = recognize_affine(quandle, recognition_cap)
            affine_status = "match" if matched is not None else "none"
        else:
            matched = None
            affine_status = "not-checked"

    decomposition = None
    if include_decomposition and matched is not None:
        admissible = (
            is_prime(matched.modulus)
            and matched.is_connected_admissible
            and matched.order_of_multiplier > 1
        )
        if admissible:
            try:
                decomposition = dict(
                    sorted(decompose_prime_affine(matched, tol=tol).nonzero().items())
                )
            except BadParameters:
                decomposition = None

    return AnalysisReport(
        source=source,
        order=order,
        connected=connected,
        latin=latin,
        inner_order=len(group.elements),
        stabilizer_order=len(stab.elements),
        rank=rank,
        translation_cycle_type=cycles,
        translation_cycles_uniform=uniform,
        tensor_class_count=len(ts),
        tensor_representatives=ts.representatives,
        tensor_sizes=ts.sizes,
        tau_class_count=len(tq),
        multiplicity_free=mf_value,
        commutation_witness=witness_text,
        gelfand_pair=gelfand_value,
        affine_status=affine_status,
        affine_modulus=matched.modulus if matched is not None else None,
        affine_multiplier=matched.multiplier if matched is not None else None,
        decomposition=decomposition,
        tool_version=__version__,
    )
