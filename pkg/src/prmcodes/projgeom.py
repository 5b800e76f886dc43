"""Points and flats of the projective space P^m over GF(q).

Points are tuples of m+1 element encodings in canonical form (leftmost
nonzero coordinate scaled to 1).  Flats are projective subspaces carried as
reduced-row-echelon basis matrices, which makes flat equality structural.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .errors import (
    AlreadyHyperplane,
    DimensionMismatch,
    NotHyperplane,
    ZeroSpan,
    ZeroVector,
)
from .gf import FieldSpec


def num_points(m, q):
    """|P^m(F_q)| = (q^(m+1) - 1)/(q - 1)."""
    return (q ** (m + 1) - 1) // (q - 1)


@functools.lru_cache(maxsize=None)
def _point_order(m, field):
    points = []
    q = field.q
    for lead in range(m + 1):
        prefix = (0,) * lead + (1,)
        for tail in itertools.product(range(q), repeat=m - lead):
            points.append(prefix + tail)
    index = {pt: i for i, pt in enumerate(points)}
    return points, index


def enumerate_points(m: int, field: FieldSpec):
    """All canonical points of P^m, in the normative block order.

    Blocks by position of the leading 1; within a block the free trailing
    coordinates ascend with the rightmost varying fastest.
    """
    return _point_order(m, field)[0]


def point_index(m: int, field: FieldSpec):
    """Map from canonical point to its position in enumerate_points."""
    return _point_order(m, field)[1]


def canonicalize(v, field: FieldSpec):
    """Scale a nonzero vector so its leftmost nonzero coordinate is 1."""
    lead = next((x for x in v if x != 0), None)
    if lead is None:
        raise ZeroVector(f"cannot canonicalize the zero vector {v}")
    if lead == 1:
        return tuple(v)
    c = field.inv(lead)
    return tuple(field.mul(c, x) for x in v)


def rref(rows, field: FieldSpec):
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    M = [list(r) for r in rows]
    if not M:
        return (), ()
    ncols = len(M[0])
    pivots = []
    r = 0
    for col in range(ncols):
        hit = next((i for i in range(r, len(M)) if M[i][col] != 0), None)
        if hit is None:
            continue
        M[r], M[hit] = M[hit], M[r]
        inv = field.inv(M[r][col])
        if inv != 1:
            M[r] = [field.mul(inv, x) for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][col] != 0:
                c = M[i][col]
                M[i] = [field.sub(x, field.mul(c, y)) for x, y in zip(M[i], M[r])]
        pivots.append(col)
        r += 1
        if r == len(M):
            break
    return tuple(tuple(row) for row in M[:r]), tuple(pivots)


@dataclass(frozen=True)
class Flat:
    """A projective subspace of dimension dim, basis in RREF (canonical)."""

    dim: int
    basis: tuple
    field: FieldSpec

    @property
    def ambient_dim(self):
        return len(self.basis[0]) - 1


def span(generators, field: FieldSpec) -> Flat:
    """Flat spanned by the given coordinate vectors."""
    basis, _ = rref(generators, field)
    if not basis:
        raise ZeroSpan("all generators are zero")
    return Flat(dim=len(basis) - 1, basis=basis, field=field)


def contains(flat: Flat, point) -> bool:
    """Membership test: reduce the point by the RREF basis rows."""
    if len(point) != len(flat.basis[0]):
        raise DimensionMismatch(
            f"point has {len(point)} coordinates, flat lives in {len(flat.basis[0])}"
        )
    field = flat.field
    v = list(point)
    for row in flat.basis:
        lead = next(i for i, x in enumerate(row) if x != 0)
        if v[lead] != 0:
            c = v[lead]
            v = [field.sub(x, field.mul(c, y)) for x, y in zip(v, row)]
    return not any(v)


@functools.lru_cache(maxsize=None)
def flat_points(flat: Flat):
    """All canonical points of the flat, in the ambient PointOrder."""
    field = flat.field
    m = flat.ambient_dim
    idx = point_index(m, field)
    pts = []
    for coeffs in enumerate_points(flat.dim, field):
        v = [0] * (m + 1)
        for c, row in zip(coeffs, flat.basis):
            if c:
                for i, x in enumerate(row):
                    if x:
                        v[i] = field.add(v[i], field.mul(c, x))
        pts.append(canonicalize(v, field))
    pts.sort(key=idx.__getitem__)
    return tuple(pts)


@functools.lru_cache(maxsize=None)
def _extensions_cached(flat: Flat):
    field = flat.field
    m = flat.ambient_dim
    if flat.dim >= m - 1:
        raise AlreadyHyperplane(f"flat of dim {flat.dim} has no proper extensions in P^{m}")
    in_flat = set(flat_points(flat))
    covered = set()
    out = []
    for p in enumerate_points(m, field):
        if p in in_flat or p in covered:
            continue
        g = span(flat.basis + (p,), field)
        out.append(g)
        covered.update(flat_points(g))
    out.sort(key=lambda f: f.basis)
    return tuple(out)


def extensions(flat: Flat):
    """All flats of dimension dim+1 through the given flat.

    There are (q^(m-j) - 1)/(q - 1) of them for a dim-j flat, they partition
    the complement of the flat, and they come back in ascending basis order.
    """
    return _extensions_cached(flat)


def hyperplane_form(flat: Flat):
    """The linear form (normalized, leftmost nonzero coefficient 1) whose
    zero set is the given hyperplane; computed as the null space of its basis.
    """
    from .homopoly import HomPoly

    field = flat.field
    m = flat.ambient_dim
    if flat.dim != m - 1:
        raise NotHyperplane(f"flat has dim {flat.dim}, need {m - 1}")
    basis, pivots = rref(flat.basis, field)
    free = next(c for c in range(m + 1) if c not in pivots)
    v = [0] * (m + 1)
    v[free] = 1
    for row, pc in zip(basis, pivots):
        v[pc] = field.neg(row[free])
    v = canonicalize(v, field)
    terms = {}
    for i, c in enumerate(v):
        if c:
            exp = [0] * (m + 1)
            exp[i] = 1
            terms[tuple(exp)] = c
    return HomPoly(nvars=m + 1, degree=1, terms=terms, field=field)


def parse_points(text, m, field: FieldSpec):
    """Point text format: one point per line, comma-separated encodings.

    Non-canonical inputs are canonicalized; blank lines and #-comments skipped.
    """
    pts = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#")[0].strip()
        if not line:
            continue
        coords = tuple(int(x) for x in line.split(","))
        if len(coords) != m + 1:
            raise DimensionMismatch(f"line {lineno}: expected {m + 1} coordinates")
        if any(not 0 <= c < field.q for c in coords):
            raise ValueError(f"line {lineno}: coordinate out of range for {field}")
        pts.append(canonicalize(coords, field))
    return pts


def format_points(points):
    return "\n".join(",".join(str(c) for c in p) for p in points)
