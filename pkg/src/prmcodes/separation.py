"""Separating hyperplanes via nested flat chains, and the gap-closing
product that kills every point of a finite set except the last one.

For a set of t <= q+1 distinct points, a hyperplane through one point and
through none of the others always exists; it is built by growing a chain of
flats from the target point, at each step taking the first extension (in
canonical order) that avoids the other points.  The counting bound
t - 1 < (q^(m-j) - 1)/(q - 1) guarantees a valid choice at every step.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DuplicatePoints,
    NonvanishingSetMismatch,
    TooManyPoints,
    WrongRegime,
)
from .gf import FieldSpec
from .homopoly import HomPoly, nonvanishing_set, zero_set
from .projgeom import Flat, contains, extensions, hyperplane_form, num_points, span


@dataclass(frozen=True)
class SeparationInstance:
    """A tuple of distinct canonical points of P^m, at most q+1 of them."""

    points: tuple
    field: FieldSpec

    def __post_init__(self):
        t = len(self.points)
        if t < 1:
            raise ValueError("need at least one point")
        if len(set(self.points)) != t:
            raise DuplicatePoints(f"instance points are not pairwise distinct: {self.points}")
        if t > self.field.q + 1:
            raise TooManyPoints(t, self.field.q)

    @property
    def m(self):
        return len(self.points[0]) - 1

    @property
    def t(self):
        return len(self.points)


@dataclass(frozen=True)
class FlatChain:
    """Strictly nested flats of dimensions 0..m-1 witnessing a separating
    hyperplane for the target point; every member contains the target and
    no other instance point."""

    target: int
    flats: tuple


def separating_hyperplane(inst: SeparationInstance, i: int):
    """Hyperplane through inst.points[i] avoiding every other instance point.

    Returns (hyperplane, chain).  Ties broken by taking the first valid
    extension in canonical basis order, so output is deterministic.
    For m = 1 the hyperplane is the point-flat of the target itself.
    """
    if not 0 <= i < inst.t:
        raise IndexError(f"target index {i} out of range for {inst.t} points")
    field = inst.field
    target = inst.points[i]
    others = [p for j, p in enumerate(inst.points) if j != i]
    flat = span((target,), field)
    chain = [flat]
    for _ in range(inst.m - 1):
        chosen = None
        for g in extensions(flat):
            if not any(contains(g, p) for p in others):
                chosen = g
                break
        # t-1 <= q other points block at most t-1 of the
        # (q^(m-j)-1)/(q-1) >= q+1 extensions, so one always remains
        assert chosen is not None
        flat = chosen
        chain.append(flat)
    return flat, FlatChain(target=i, flats=tuple(chain))


def separating_family(inst: SeparationInstance):
    """For each point P_i: (H_i, G_i) with G_i(P_i) = 0 and G_i(P_j) != 0
    for every j != i (the strong pairwise separation condition)."""
    out = []
    for i in range(inst.t):
        h, _ = separating_hyperplane(inst, i)
        out.append((h, hyperplane_form(h)))
    return out


def gap_product(F: HomPoly, inst: SeparationInstance) -> HomPoly:
    """H = F * G_1 * ... * G_{t-1}, vanishing everywhere except at the last
    instance point.

    Requires inst.points to be exactly the non-vanishing set of F (checked),
    ordered so the distinguished surviving point comes last.
    """
    t = inst.t
    if t < 2:
        raise ValueError("need at least two points (t >= 2)")
    m = inst.m
    if set(nonvanishing_set(F, m)) != set(inst.points):
        raise NonvanishingSetMismatch(
            "instance points are not the non-vanishing set of F"
        )
    H = F
    for i in range(t - 1):
        h, _ = separating_hyperplane(inst, i)
        H = H.multiply(hyperplane_form(h))
    return H


def contradiction_report(q: int, m: int, nu: int, F: HomPoly) -> dict:
    """Desk check of the degree-regime contradiction for a candidate F.

    Only degrees of the form nu = (m-1)(q-1) + s + 1 with 0 <= s < q-1 are in
    scope.  If F's non-vanishing count t falls in 0 < t < q-s, builds the gap
    product and reports its degree, the bound deg H <= m(q-1), and |Z(H)|.
    Otherwise reports that the two-branch zero-count bound holds for this F.
    """
    s = nu - 1 - (m - 1) * (q - 1)
    if not 0 <= s < q - 1:
        raise WrongRegime(f"nu={nu} is not (m-1)(q-1)+s+1 with 0 <= s < q-1 for m={m}, q={q}")
    if F.degree != nu:
        raise WrongRegime(f"deg F = {F.degree}, expected nu = {nu}")
    n = num_points(m, q)
    nonvan = nonvanishing_set(F, m)
    t = len(nonvan)
    report = {"q": q, "m": m, "nu": nu, "s": s, "t": t, "n": n}
    if t == 0 or t >= q - s:
        report["eq1_holds"] = True
        report["branch"] = "all points vanish" if t == 0 else f"|Z(F)| <= n - (q-s) = {n - (q - s)}"
        return report
    inst = SeparationInstance(points=tuple(nonvan), field=F.field)
    H = gap_product(F, inst)
    zh = zero_set(H, m)
    report["eq1_holds"] = False
    report["deg_H"] = H.degree
    report["deg_bound"] = m * (q - 1)
    report["deg_bound_ok"] = H.degree <= m * (q - 1)
    report["zero_count_H"] = len(zh)
    report["single_nonvanishing"] = len(zh) == n - 1
    report["surviving_point"] = inst.points[-1]
    return report
