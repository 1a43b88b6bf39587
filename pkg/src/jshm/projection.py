"""Orthogonal projection onto the Bose-Mesner algebra.

For a family F with characteristic vector x, the projection of the rank-one
matrix x x^T is determined by the pair distribution of F: the coefficient
on A_r is the number of ordered member pairs meeting in k - r points,
divided by the number of ones of A_r.  The same projection computed from a
dense matrix is retained as an independent oracle path.

The projection preserves both the trace and the sum of entries (take the
defining orthogonality against I and against the all-ones matrix), so a
family projects to trace |F| and entry sum |F|^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import rat_to_str
from .johnson import (
    BMVector,
    SchemeParams,
    colex_masks,
    class_size,
    entry_sum,
    trace,
)
from .subsets import Family


@dataclass(frozen=True)
class PairDistribution:
    """d_r = number of ordered pairs (S, T) in F x F with |S inter T| = k - r."""

    counts: tuple[int, ...]


def pair_distribution(fam: Family) -> PairDistribution:
    """Exact ordered-pair counts, diagonal included (d_0 >= |F|)."""
    k = fam.k
    counts = [0] * (k + 1)
    masks = [m.mask for m in fam.members]
    for a in masks:
        for b in masks:
            counts[k - (a & b).bit_count()] += 1
    return PairDistribution(tuple(counts))


def project_family(fam: Family) -> BMVector:
    """Projection of the family's pair matrix onto the algebra."""
    params = SchemeParams(fam.n, fam.k)
    d = pair_distribution(fam).counts
    return BMVector(
        params,
        tuple(Fraction(d[r], class_size(params, r)) for r in range(fam.k + 1)),
    )


def project_dense(mat: list[list], params: SchemeParams) -> BMVector:
    """Projection of an arbitrary exact square matrix (oracle path).

    The coefficient on A_r is the sum of the entries of ``mat`` lying on the
    support of A_r, divided by the number of ones of A_r.  Matrices already
    in the algebra are fixed points.
    """
    order = params.order
    if len(mat) != order or any(len(row) != order for row in mat):
        raise ValueError(f"matrix order does not match C({params.n},{params.k}) = {order}")
    masks = colex_masks(params.n, params.k)
    k = params.k
    sums = [Fraction(0)] * (k + 1)
    for a, row in zip(masks, mat):
        for b, x in zip(masks, row):
            if x:
                sums[k - (a & b).bit_count()] += x
    return BMVector(
        params, tuple(sums[r] / class_size(params, r) for r in range(k + 1))
    )


@dataclass(frozen=True)
class FamilyLemmaReport:
    """Diagnostic check of the projection of a t-intersecting family.

    When the family is t-intersecting its projection must be supported on
    A_0..A_{k-t} with trace |F| and entry sum |F|^2; a family that is not
    t-intersecting is reported (with a violating pair) rather than rejected.
    """

    t: int
    t_intersecting: bool
    violating_pair: tuple[tuple[int, ...], tuple[int, ...]] | None
    support_ok: bool
    trace: Fraction
    entry_sum: Fraction
    trace_ok: bool
    entry_sum_ok: bool
    coeffs: tuple[Fraction, ...]

    @property
    def verified(self) -> bool:
        return self.t_intersecting and self.support_ok and self.trace_ok and self.entry_sum_ok

    def to_dict(self) -> dict:
        return {
            "t_intersecting": self.t_intersecting,
            "support_ok": self.support_ok,
            "trace": rat_to_str(self.trace),
            "elsm": rat_to_str(self.entry_sum),
            "coeffs": [rat_to_str(c) for c in self.coeffs],
        }


def family_lemma_report(fam: Family, t: int) -> FamilyLemmaReport:
    if not 0 <= t <= fam.k:
        raise ValueError(f"strength t={t} out of range [0, {fam.k}]")
    violating = None
    members = fam.members
    for idx, a in enumerate(members):
        for b in members[idx + 1:]:
            if (a.mask & b.mask).bit_count() < t:
                violating = (a.elements, b.elements)
                break
        if violating:
            break
    is_t = violating is None

    proj = project_family(fam)
    support_ok = all(proj.coeffs[r] == 0 for r in range(fam.k - t + 1, fam.k + 1))
    tr = trace(proj)
    es = entry_sum(proj)
    return FamilyLemmaReport(
        t=t,
        t_intersecting=is_t,
        violating_pair=violating,
        support_ok=support_ok,
        trace=tr,
        entry_sum=es,
        trace_ok=tr == fam.size,
        entry_sum_ok=es == fam.size * fam.size,
        coeffs=proj.coeffs,
    )
