"""Wilson's certificate matrix and the Erdos-Ko-Rado bound machinery.

The certificate matrix is I + Omega(n,k,t), where Omega is an alternating
combination of the basis vectors counting contained-and-avoiding subsets.
Two variants of Omega are implemented side by side:

* ``literal``: the denominator C(n-k-t+1, k-t) is constant across the sum,
  exactly as the formula is sometimes printed;
* ``corrected``: the denominator C(n-k-t+i, k-t) varies with the summation
  index.

Only the corrected variant agrees with the design-projection matrix (the
identity module demonstrates the mismatch of the literal one mechanically),
so ``corrected`` is the default everywhere.

A certificate for (n,k,t) verifies, with exact arithmetic throughout: the
matrix is positive semidefinite, its off-diagonal support avoids A_1..
A_{k-t}, and its entry-sum/trace ratio is C(n,t)/C(k,t); by the clique-
coclique bound these force every t-intersecting family to have size at most
C(n-t,k-t).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .designs import Design
from .exact import RationalFunction, binom, binom_rf, rat_to_str
from .johnson import (
    BMVector,
    SchemeParams,
    entry_sum,
    identity_vector,
    psd_report,
    schur,
    trace,
    wilson_basis_vector,
)
from .projection import family_lemma_report, project_family
from .subsets import Family

VARIANTS = ("literal", "corrected")


def _check_variant(variant: str):
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}, expected one of {VARIANTS}")


def wilson_matrix(n: int, k: int, t: int, variant: str = "corrected") -> BMVector:
    """Omega(n,k,t): alternating sum of scaled contained/avoiding vectors.

    The summation runs over i = 0..t-1; beyond t-1 the numerator binomial
    C(k-1-i, k-t) vanishes, so nothing is lost by stopping there.
    """
    _check_variant(variant)
    if not 1 <= t <= k <= n - k:
        raise ValueError(f"need 1 <= t <= k <= n-k, got t={t}, k={k}, n={n}")
    params = SchemeParams(n, k)
    total = BMVector(params, (Fraction(0),) * (k + 1))
    for i in range(t):
        den = binom(n - k - t + (1 if variant == "literal" else i), k - t)
        if den == 0:
            raise ValueError(f"zero denominator at summation index {i}")
        coeff = Fraction((-1) ** (t - 1 - i) * binom(k - 1 - i, k - t), den)
        total = total + wilson_basis_vector(k - i, params).scale(coeff)
    return total


def certificate_matrix(n: int, k: int, t: int, variant: str = "corrected") -> BMVector:
    """I + Omega(n,k,t)."""
    return identity_vector(SchemeParams(n, k)) + wilson_matrix(n, k, t, variant)


def wilson_matrix_symbolic(k: int, t: int, variant: str = "corrected") -> list[RationalFunction]:
    """Coefficients of Omega(nu,k,t) on A_0..A_k as rational functions of nu."""
    _check_variant(variant)
    if not 1 <= t <= k:
        raise ValueError(f"need 1 <= t <= k, got t={t}, k={k}")
    coeffs = [RationalFunction.const(0) for _ in range(k + 1)]
    for i in range(t):
        shift = -k - t + (1 if variant == "literal" else i)
        den = binom_rf(shift, k - t)
        if den.is_zero():
            raise ValueError(f"zero denominator at summation index {i}")
        sign_num = (-1) ** (t - 1 - i) * binom(k - 1 - i, k - t)
        for r in range(k + 1):
            weight = binom(r, k - i)
            if weight:
                coeffs[r] = coeffs[r] + (sign_num * weight) / den
    return coeffs


def support_ok(v: BMVector, t: int) -> bool:
    """True when coefficients on A_1..A_{k-t} vanish (A_0 is permitted,
    the certificate matrix carries the identity on purpose)."""
    return all(v.coeffs[r] == 0 for r in range(1, v.params.k - t + 1))


def sum_trace_ratio(v: BMVector) -> Fraction:
    tr = trace(v)
    if tr == 0:
        raise ZeroDivisionError("ratio undefined: zero trace")
    return entry_sum(v) / tr


@dataclass(frozen=True)
class CliqueCocliqueReport:
    """The clique-coclique inequality for two algebra elements.

    Premises: both positive semidefinite, and their entrywise product is a
    multiple of the identity.  When a premise fails the conclusion is
    reported as not applicable, never silently asserted.
    """

    psd_first: bool
    psd_second: bool
    schur_multiple_of_identity: bool
    schur_gamma: Fraction | None
    applicable: bool
    product: Fraction | None
    order: int
    holds: bool | None
    tight: bool | None

    def to_dict(self) -> dict:
        return {
            "psd_first": self.psd_first,
            "psd_second": self.psd_second,
            "schur_multiple_of_identity": self.schur_multiple_of_identity,
            "schur_gamma": None if self.schur_gamma is None else rat_to_str(self.schur_gamma),
            "applicable": self.applicable,
            "product": None if self.product is None else rat_to_str(self.product),
            "order": self.order,
            "holds": self.holds,
            "tight": self.tight,
        }


def clique_coclique(u: BMVector, v: BMVector) -> CliqueCocliqueReport:
    """Check the premises and evaluate (elsm/tr)(u) * (elsm/tr)(v) <= C(n,k)."""
    prod = schur(u, v)
    schur_ok = all(c == 0 for c in prod.coeffs[1:])
    gamma = prod.coeffs[0] if schur_ok else None
    psd_u = psd_report(u).psd
    psd_v = psd_report(v).psd
    applicable = psd_u and psd_v and schur_ok and trace(u) != 0 and trace(v) != 0
    order = u.params.order
    if applicable:
        product = sum_trace_ratio(u) * sum_trace_ratio(v)
        holds = product <= order
        tight = product == order
    else:
        product = holds = tight = None
    return CliqueCocliqueReport(
        psd_first=psd_u,
        psd_second=psd_v,
        schur_multiple_of_identity=schur_ok,
        schur_gamma=gamma,
        applicable=applicable,
        product=product,
        order=order,
        holds=holds,
        tight=tight,
    )


@dataclass(frozen=True)
class EKRCertificate:
    """Exact certificate that t-intersecting families in J(n,k) have size
    at most C(n-t, k-t)."""

    n: int
    k: int
    t: int
    variant: str
    matrix: BMVector
    spectrum: tuple[Fraction, ...]
    psd: bool
    min_eigenvalue: Fraction
    argmin: int
    support_ok: bool
    ratio: Fraction
    ratio_target: Fraction
    ratio_ok: bool
    bound: int
    regime_ok: bool
    valid: bool
    notes: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "t": self.t,
            "variant": self.variant,
            "coeffs": [rat_to_str(c) for c in self.matrix.coeffs],
            "spectrum": [rat_to_str(x) for x in self.spectrum],
            "psd": self.psd,
            "min_eigenvalue": rat_to_str(self.min_eigenvalue),
            "support_ok": self.support_ok,
            "ratio": rat_to_str(self.ratio),
            "ratio_ok": self.ratio_ok,
            "bound": self.bound,
            "regime_ok": self.regime_ok,
            "valid": self.valid,
            "notes": list(self.notes),
        }


def ekr_certificate(n: int, k: int, t: int, variant: str = "corrected") -> EKRCertificate:
    """Build the certificate matrix and verify all certificate conditions.

    The regime requirement is n >= (t+1)(k-t+1); below the threshold the
    bound is false and the certificate duly fails (the minimum eigenvalue
    goes negative), which is reported rather than raised.
    """
    if not 1 <= t < k:
        raise ValueError(f"need 1 <= t < k, got t={t}, k={k}")
    if k > n - k:
        raise ValueError(f"need k <= n-k, got k={k}, n={n}")
    nabla = certificate_matrix(n, k, t, variant)
    rep = psd_report(nabla)
    sup = support_ok(nabla, t)
    ratio = sum_trace_ratio(nabla)
    target = Fraction(binom(n, t), binom(k, t))
    ratio_ok = ratio == target
    bound = binom(n - t, k - t)
    regime_ok = n >= (t + 1) * (k - t + 1)
    valid = rep.psd and sup and ratio_ok and regime_ok
    notes = [
        "ratio target is C(n,t)/C(k,t) = C(n,k)/C(n-t,k-t) = "
        f"{rat_to_str(target)}; the variant C(n,t)/C(n-t,k-t) = "
        f"{rat_to_str(Fraction(binom(n, t), binom(n - t, k - t)))} "
        "does not reproduce the bound C(n-t,k-t) and is listed only for comparison",
    ]
    if not regime_ok:
        notes.append(
            f"out of regime: n = {n} < (t+1)(k-t+1) = {(t + 1) * (k - t + 1)}"
            + (
                f"; PSD fails with eigenvalue {rat_to_str(rep.min_eigenvalue)}"
                f" on eigenspace {rep.argmin}"
                if not rep.psd
                else ""
            )
        )
    return EKRCertificate(
        n=n,
        k=k,
        t=t,
        variant=variant,
        matrix=nabla,
        spectrum=rep.spectrum,
        psd=rep.psd,
        min_eigenvalue=rep.min_eigenvalue,
        argmin=rep.argmin,
        support_ok=sup,
        ratio=ratio,
        ratio_target=target,
        ratio_ok=ratio_ok,
        bound=bound,
        regime_ok=regime_ok,
        valid=valid,
        notes=tuple(notes),
    )


@dataclass(frozen=True)
class DesignBoundReport:
    """The intersecting-family bound derived from an explicit Steiner design."""

    n: int
    k: int
    t: int
    premises_ok: bool
    detail: str
    clique: CliqueCocliqueReport | None
    bound: int
    family_size: int
    within_bound: bool | None
    tight: bool | None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "t": self.t,
            "premises_ok": self.premises_ok,
            "detail": self.detail,
            "clique_coclique": None if self.clique is None else self.clique.to_dict(),
            "bound": self.bound,
            "family_size": self.family_size,
            "within_bound": self.within_bound,
            "tight": self.tight,
        }


def bound_from_design(design: Design, fam: Family) -> DesignBoundReport:
    """Bound |F| <= C(n-t,k-t) via the scaled projection of a Steiner design.

    The design projection, rescaled by C(n,k)/|D|, plays the certificate
    matrix's role; the family projection supplies the other side of the
    clique-coclique inequality.
    """
    n, k, t = design.n, design.k, design.t
    bound = binom(n - t, k - t)
    if fam.n != n or fam.k != k:
        return DesignBoundReport(
            n, k, t, False, "family parameters do not match the design",
            None, bound, fam.size, None, None,
        )
    if design.lam != 1:
        return DesignBoundReport(
            n, k, t, False, "design is not a Steiner system",
            None, bound, fam.size, None, None,
        )
    lemma = family_lemma_report(fam, t)
    if not lemma.t_intersecting:
        return DesignBoundReport(
            n, k, t, False,
            f"family is not {t}-intersecting: blocks "
            f"{list(lemma.violating_pair[0])} and {list(lemma.violating_pair[1])} "
            "meet in too few points",
            None, bound, fam.size, None, None,
        )
    fam_side = project_family(fam)
    design_side = project_family(design.family).scale(
        Fraction(SchemeParams(n, k).order, design.size)
    )
    clique = clique_coclique(fam_side, design_side)
    return DesignBoundReport(
        n=n,
        k=k,
        t=t,
        premises_ok=clique.applicable,
        detail="ok" if clique.applicable else "clique-coclique premises failed",
        clique=clique,
        bound=bound,
        family_size=fam.size,
        within_bound=fam.size <= bound,
        tight=fam.size == bound,
    )
