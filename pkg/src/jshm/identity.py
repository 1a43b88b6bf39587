"""The central identity: the design-projection matrix versus Wilson's matrix.

For fixed (k, t) both sides are assembled as coefficient vectors on
A_0..A_k whose entries are rational functions of the ground-set size nu,
and compared coefficientwise.  Coefficient equality is strictly stronger
than equality of every eigenvalue (eigenvalues are linear in the
coefficients), and it is decidable: the differences h_r reduce to canonical
form, so "equal" means every h_r is the zero rational function.

A pointwise comparator re-derives the verdict from exact evaluations at
integer ground-set sizes: once both sides agree at more points than the
degree of the cleared numerators (2k+1 suffices), polynomial vanishing
forces symbolic equality.  The two routes cross-check each other, and a
third route verifies the identity at ground-set sizes where a Steiner
system is actually found by search.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .designs import (
    admissible,
    design_matrix,
    design_matrix_symbolic,
    design_projection_report,
    search_design,
    DEFAULT_SEARCH_BUDGET,
)
from .exact import PoleError, RationalFunction, rat_to_str, rf_to_str
from .johnson import BMVector, SchemeParams, SelfCheckError, identity_vector
from .wilson import certificate_matrix, wilson_matrix, wilson_matrix_symbolic

LHS_CHOICES = ("m", "m_plus_i")
RHS_CHOICES = ("omega_literal", "omega_corrected", "nabla_corrected")

_WITNESS_SCAN_LIMIT = 200


def symbolic_side(name: str, k: int, t: int) -> list[RationalFunction]:
    """Coefficients on A_0..A_k of one side, as rational functions of nu."""
    if name == "m":
        return design_matrix_symbolic(k, t)
    if name == "m_plus_i":
        coeffs = design_matrix_symbolic(k, t)
        coeffs[0] = coeffs[0] + 1
        return coeffs
    if name == "omega_literal":
        return wilson_matrix_symbolic(k, t, "literal")
    if name == "omega_corrected":
        return wilson_matrix_symbolic(k, t, "corrected")
    if name == "nabla_corrected":
        coeffs = wilson_matrix_symbolic(k, t, "corrected")
        coeffs[0] = coeffs[0] + 1
        return coeffs
    raise ValueError(f"unknown side {name!r}")


def numeric_side(name: str, n: int, k: int, t: int) -> BMVector:
    """One side evaluated at a concrete ground-set size."""
    if name == "m":
        return design_matrix(n, k, t)
    if name == "m_plus_i":
        return identity_vector(SchemeParams(n, k)) + design_matrix(n, k, t)
    if name == "omega_literal":
        return wilson_matrix(n, k, t, "literal")
    if name == "omega_corrected":
        return wilson_matrix(n, k, t, "corrected")
    if name == "nabla_corrected":
        return certificate_matrix(n, k, t, "corrected")
    raise ValueError(f"unknown side {name!r}")


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of a symbolic coefficient comparison."""

    k: int
    t: int
    lhs: str
    rhs: str
    h: tuple[RationalFunction, ...]
    equal: bool
    witness: tuple[int, int, Fraction] | None  # (r, n, h_r(n))

    def to_dict(self) -> dict:
        witness = None
        if self.witness is not None:
            r, n, value = self.witness
            witness = {"r": r, "n": n, "value": rat_to_str(value)}
        return {
            "k": self.k,
            "t": self.t,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "equal": self.equal,
            "h": [rf_to_str(f) for f in self.h],
            "witness": witness,
        }


def _validate_sides(k: int, t: int, lhs: str, rhs: str):
    if not 1 <= t < k:
        raise ValueError(f"need 1 <= t < k, got t={t}, k={k}")
    if lhs not in LHS_CHOICES:
        raise ValueError(f"lhs must be one of {LHS_CHOICES}, got {lhs!r}")
    if rhs not in RHS_CHOICES:
        raise ValueError(f"rhs must be one of {RHS_CHOICES}, got {rhs!r}")


def compare_symbolic(k: int, t: int, lhs: str = "m",
                     rhs: str = "omega_corrected") -> IdentityReport:
    """Subtract the two sides coefficientwise and reduce.

    Since the classes A_r are linearly independent, vanishing of every
    difference h_r is equivalent to equality of the matrices for every
    ground-set size (away from the finitely many denominator roots).
    """
    _validate_sides(k, t, lhs, rhs)
    left = symbolic_side(lhs, k, t)
    right = symbolic_side(rhs, k, t)
    h = tuple(a - b for a, b in zip(left, right))
    for r, f in enumerate(h):
        if f.num.degree > 2 * k:
            raise SelfCheckError(
                f"difference at class {r} has numerator degree {f.num.degree} > 2k"
            )
    witness = None
    for r, f in enumerate(h):
        if not f.is_zero():
            witness = (r,) + _sample_nonzero(f, k)
            break
    return IdentityReport(
        k=k, t=t, lhs=lhs, rhs=rhs, h=h, equal=witness is None, witness=witness
    )


def _sample_nonzero(f: RationalFunction, k: int) -> tuple[int, Fraction]:
    """First integer n >= 2k+1 that is not a pole and where f(n) != 0."""
    for n in range(2 * k + 1, 2 * k + 1 + _WITNESS_SCAN_LIMIT):
        try:
            value = f.evaluate(n)
        except PoleError:
            continue
        if value != 0:
            return n, value
    raise SelfCheckError("no witness point found for a nonzero rational function")


@dataclass(frozen=True)
class PointwiseReport:
    """Outcome of exact evaluation of both sides over an integer range."""

    k: int
    t: int
    lhs: str
    rhs: str
    n_from: int
    n_to: int
    points_checked: int
    points_equal: int
    skipped_poles: tuple[int, ...]
    first_failure: tuple[int, int, Fraction, Fraction] | None  # (n, r, lhs, rhs)
    equal: bool
    threshold: int

    def to_dict(self) -> dict:
        failure = None
        if self.first_failure is not None:
            n, r, a, b = self.first_failure
            failure = {"n": n, "r": r, "lhs": rat_to_str(a), "rhs": rat_to_str(b)}
        return {
            "k": self.k,
            "t": self.t,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "n_from": self.n_from,
            "n_to": self.n_to,
            "points_checked": self.points_checked,
            "points_equal": self.points_equal,
            "skipped_poles": list(self.skipped_poles),
            "first_failure": failure,
            "equal": self.equal,
            "threshold": self.threshold,
        }


def compare_pointwise(k: int, t: int, lhs: str, rhs: str,
                      n_from: int, n_to: int) -> PointwiseReport:
    """Evaluate both sides exactly at each n in [n_from, n_to] and compare.

    The range must start at 2k (below that the coefficient formulas hit
    poles or empty classes) and contain at least 2k+1 integers; agreement at
    2k+1 pole-free points exceeds the cleared-numerator degree bound and so
    certifies the identity.  The verdict is cross-checked against
    :func:`compare_symbolic` and a disagreement aborts loudly.
    """
    _validate_sides(k, t, lhs, rhs)
    if n_from < 2 * k:
        raise ValueError(f"n_from must be at least 2k = {2 * k}, got {n_from}")
    if n_to - n_from + 1 < 2 * k + 1:
        raise ValueError(f"range must contain at least 2k+1 = {2 * k + 1} integers")

    threshold = 2 * k + 1
    skipped = []
    equal_count = 0
    checked = 0
    first_failure = None
    for n in range(n_from, n_to + 1):
        try:
            left = numeric_side(lhs, n, k, t)
            right = numeric_side(rhs, n, k, t)
        except (ValueError, ZeroDivisionError):
            skipped.append(n)
            continue
        checked += 1
        if left.coeffs == right.coeffs:
            equal_count += 1
        elif first_failure is None:
            r = next(i for i, (a, b) in enumerate(zip(left.coeffs, right.coeffs)) if a != b)
            first_failure = (n, r, left.coeffs[r], right.coeffs[r])

    equal = first_failure is None and equal_count >= threshold
    symbolic = compare_symbolic(k, t, lhs, rhs)
    if first_failure is None and equal_count >= threshold and not symbolic.equal:
        raise SelfCheckError("pointwise equality contradicts the symbolic comparison")
    if first_failure is not None and symbolic.equal:
        raise SelfCheckError("pointwise failure contradicts the symbolic comparison")
    return PointwiseReport(
        k=k, t=t, lhs=lhs, rhs=rhs, n_from=n_from, n_to=n_to,
        points_checked=checked, points_equal=equal_count,
        skipped_poles=tuple(skipped), first_failure=first_failure,
        equal=equal, threshold=threshold,
    )


@dataclass(frozen=True)
class WitnessPoint:
    n: int
    status: str  # verified | failed | inadmissible | not-found | unverified
    detail: str
    nodes: int | None

    def to_dict(self) -> dict:
        return {"n": self.n, "status": self.status, "detail": self.detail,
                "nodes": self.nodes}


@dataclass(frozen=True)
class WitnessReport:
    """The identity verified through explicitly found Steiner systems."""

    k: int
    t: int
    points: tuple[WitnessPoint, ...]

    @property
    def all_conclusive_verified(self) -> bool:
        return all(p.status != "failed" for p in self.points) and any(
            p.status == "verified" for p in self.points
        )

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "t": self.t,
            "points": [p.to_dict() for p in self.points],
        }


def design_witness_check(k: int, t: int, ns: list[int],
                         budget: int = DEFAULT_SEARCH_BUDGET) -> WitnessReport:
    """At each requested ground-set size: search for a t-(n,k,1) design and,
    where one is found, confirm that its rescaled projection minus the
    identity equals both the design matrix and the corrected Wilson matrix.

    Inadmissible sizes are skipped with a reason; budget exhaustion marks a
    point unverified, never failed.
    """
    if not 1 <= t < k:
        raise ValueError(f"need 1 <= t < k, got t={t}, k={k}")
    points = []
    for n in ns:
        if n < 2 * k:
            points.append(WitnessPoint(n, "inadmissible",
                                       f"n = {n} below 2k = {2 * k}", None))
            continue
        if not admissible(n, k, t):
            points.append(WitnessPoint(n, "inadmissible",
                                       "divisibility conditions fail", None))
            continue
        outcome = search_design(n, k, t, budget)
        if outcome.status == "budget-exhausted":
            points.append(WitnessPoint(n, "unverified",
                                       "search budget exhausted", outcome.nodes))
            continue
        if outcome.status == "not-found":
            points.append(WitnessPoint(n, "not-found",
                                       "exhaustive search found no design",
                                       outcome.nodes))
            continue
        design = outcome.design
        proj = design_projection_report(design)
        m = design_matrix(n, k, t)
        omega = wilson_matrix(n, k, t, "corrected")
        if not proj.verified:
            points.append(WitnessPoint(n, "failed",
                                       "design projection identity failed",
                                       outcome.nodes))
        elif m.coeffs != omega.coeffs:
            points.append(WitnessPoint(n, "failed",
                                       "design matrix differs from the corrected "
                                       "Wilson matrix", outcome.nodes))
        else:
            points.append(WitnessPoint(
                n, "verified",
                f"{design.size}-block design found; projection, design matrix "
                "and Wilson matrix all agree", outcome.nodes))
    return WitnessReport(k=k, t=t, points=tuple(points))
