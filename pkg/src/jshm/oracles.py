"""Independent brute-force ground truth.

Floating point lives here and only here: the float spectrum corroborates
the exact eigenvalue tables but never feeds a certificate.  The maximum
t-intersecting family search is an exact branch-and-bound over the
compatibility graph, with deterministic vertex order so witnesses are
reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .johnson import DEFAULT_DENSE_BUDGET, BMVector, SchemeParams
from .projection import project_dense
from .subsets import Family, all_ksubsets, make_family


def float_spectrum(mat: list[list]) -> list[float]:
    """Double-precision eigenvalues of an exact symmetric matrix, descending.

    Comparisons against exact spectra in this package use a 1e-8 tolerance;
    at the orders in scope that is orders of magnitude above the rounding
    error of the conversion.
    """
    order = len(mat)
    for i in range(order):
        if len(mat[i]) != order:
            raise ValueError("matrix is not square")
        for j in range(i):
            if mat[i][j] != mat[j][i]:
                raise ValueError(f"matrix is not symmetric at ({i},{j})")
    arr = np.array([[float(x) for x in row] for row in mat], dtype=float)
    return sorted(np.linalg.eigvalsh(arr).tolist(), reverse=True)


DEFAULT_CLIQUE_BUDGET = 5_000_000


@dataclass(frozen=True)
class MaxFamilyResult:
    """Largest t-intersecting family found; optimal means search completed."""

    n: int
    k: int
    t: int
    size: int
    witness: Family
    optimal: bool
    nodes: int

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "t": self.t,
            "blocks": self.witness.blocks(),
            "size": self.size,
            "optimal": self.optimal,
            "nodes": self.nodes,
        }


def max_family(n: int, k: int, t: int,
               budget: int = DEFAULT_CLIQUE_BUDGET) -> MaxFamilyResult:
    """Exact maximum clique on the t-compatibility graph of k-subsets.

    Vertices are the k-subsets in colex order; two are compatible when they
    meet in at least t points.  Branch and bound with a greedy-coloring
    upper bound; the budget counts vertex expansions.
    """
    if not 0 <= t <= k <= n:
        raise ValueError(f"need 0 <= t <= k <= n, got t={t}, k={k}, n={n}")
    subsets = all_ksubsets(n, k)
    masks = [s.mask for s in subsets]
    v_count = len(masks)
    adj = [0] * v_count
    for a in range(v_count):
        ma = masks[a]
        for b in range(a + 1, v_count):
            if (ma & masks[b]).bit_count() >= t:
                adj[a] |= 1 << b
                adj[b] |= 1 << a

    best: list[int] = []
    nodes = 0
    aborted = False

    def coloring(p_mask: int) -> tuple[list[int], list[int]]:
        # Greedy color classes over the candidate set, lowest index first;
        # the color number of a vertex bounds any clique inside it and the
        # vertices before it in the order.
        order: list[int] = []
        colors: list[int] = []
        color = 0
        remaining = p_mask
        while remaining:
            color += 1
            cand = remaining
            while cand:
                low = cand & -cand
                v = low.bit_length() - 1
                order.append(v)
                colors.append(color)
                remaining ^= low
                cand = (cand ^ low) & ~adj[v]
        return order, colors

    def expand(current: list[int], p_mask: int):
        nonlocal best, nodes, aborted
        order, colors = coloring(p_mask)
        for idx in range(len(order) - 1, -1, -1):
            if aborted:
                return
            if len(current) + colors[idx] <= len(best):
                return
            v = order[idx]
            nodes += 1
            if nodes > budget:
                aborted = True
                return
            current.append(v)
            sub = p_mask & adj[v]
            if sub:
                expand(current, sub)
            elif len(current) > len(best):
                best = current.copy()
            current.pop()
            p_mask &= ~(1 << v)

    expand([], (1 << v_count) - 1)

    chosen = sorted(best)
    witness = make_family(n, k, [subsets[v].elements for v in chosen])
    return MaxFamilyResult(
        n=n, k=k, t=t, size=len(chosen), witness=witness,
        optimal=not aborted, nodes=nodes,
    )


def brute_projection(fam: Family,
                     max_order: int = DEFAULT_DENSE_BUDGET) -> BMVector:
    """Projection of the family's pair matrix computed on the dense path.

    Builds the rank-one indicator matrix explicitly and projects it entry
    by entry; must agree with the pair-distribution shortcut.
    """
    params = SchemeParams(fam.n, fam.k)
    if params.order > max_order:
        raise ValueError(f"order {params.order} exceeds dense budget {max_order}")
    member_set = {m.elements for m in fam.members}
    indicator = [1 if s.elements in member_set else 0
                 for s in all_ksubsets(fam.n, fam.k)]
    dense = [[a * b for b in indicator] for a in indicator]
    return project_dense(dense, params)
