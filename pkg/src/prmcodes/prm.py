"""Projective Reed-Muller codes: generator matrix, closed-form parameters,
and independent brute-force oracles (rank, exhaustive minimum weight).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb

from .errors import BudgetExceeded, NuOutOfRange
from .gf import FieldSpec, field_from_order
from .projgeom import enumerate_points, num_points, rref


@dataclass(frozen=True)
class CodeParams:
    """[n, k, d] of the degree-nu code, with the decomposition
    nu - 1 = r(q-1) + s, 0 <= s < q-1, which drives d = (q-s) q^(m-r-1)."""

    q: int
    m: int
    nu: int
    n: int
    k: int
    d: int
    r: int
    s: int

    def as_dict(self):
        return {"q": self.q, "m": self.m, "nu": self.nu,
                "n": self.n, "k": self.k, "d": self.d, "r": self.r, "s": self.s}


@dataclass(frozen=True)
class GenMatrix:
    """Evaluation matrix: one row per degree-nu monomial (lex-descending),
    one column per projective point (PointOrder)."""

    q: int
    m: int
    nu: int
    field: FieldSpec
    monomials: tuple
    points: tuple
    entries: tuple  # tuple of row tuples, integer element encodings

    @property
    def shape(self):
        return (len(self.entries), len(self.points))


def _check_nu(q, m, nu):
    if not 1 <= nu <= m * (q - 1):
        raise NuOutOfRange(nu, m, q)


def monomials(m: int, nu: int):
    """All exponent vectors of length m+1 summing to nu, lex-descending."""
    if m == 0:
        return [(nu,)]
    out = []
    for e0 in range(nu, -1, -1):
        for rest in monomials(m - 1, nu - e0):
            out.append((e0,) + rest)
    return out


def generator_matrix(q: int, m: int, nu: int) -> GenMatrix:
    _check_nu(q, m, nu)
    field = field_from_order(q)
    pts = tuple(enumerate_points(m, field))
    monos = tuple(monomials(m, nu))
    rows = []
    for exp in monos:
        row = []
        for p in pts:
            v = 1
            for x, e in zip(p, exp):
                if e:
                    if x == 0:
                        v = 0
                        break
                    v = field.mul(v, field.pow(x, e))
            row.append(v)
        rows.append(tuple(row))
    return GenMatrix(q, m, nu, field, monos, pts, tuple(rows))


def rank_gf(M, field: FieldSpec) -> int:
    """Rank over GF(q) by Gaussian elimination (deterministic pivoting)."""
    basis, _ = rref(M, field)
    return len(basis)


def dimension_formula(q: int, m: int, nu: int) -> int:
    """The inclusion-exclusion dimension count.

    Outer sum over t in (0, nu] congruent to nu mod q-1 (every t when q=2),
    inner alternating sum with the convention C(a, b) = 0 for b < 0.
    """
    _check_nu(q, m, nu)
    total = 0
    for t in range(1, nu + 1):
        if (nu - t) % (q - 1) != 0:
            continue
        inner = 0
        for j in range(m + 2):
            b = t - j * q
            if b < 0:
                continue  # vanishing binomial; effective limit is floor(t/q)
            inner += (-1) ** j * comb(m + 1, j) * comb(b + m, b)
        total += inner
    return total


def distance_formula(q: int, m: int, nu: int) -> CodeParams:
    """Closed-form parameters: d = (q-s) q^(m-r-1) with nu-1 = r(q-1)+s."""
    _check_nu(q, m, nu)
    r, s = divmod(nu - 1, q - 1)
    d = (q - s) * q ** (m - r - 1)
    return CodeParams(q=q, m=m, nu=nu, n=num_points(m, q),
                      k=dimension_formula(q, m, nu), d=d, r=r, s=s)


def row_basis(G: GenMatrix):
    """An RREF basis of the row space of the generator matrix."""
    basis, _ = rref(G.entries, G.field)
    return basis


def min_weight_exhaustive(q: int, m: int, nu: int, budget: int = 2_000_000) -> int:
    """Exhaustive minimum Hamming weight over all nonzero codewords.

    Enumerates one message per projective equivalence class (first nonzero
    message coordinate fixed to 1); scaling a codeword preserves weight, so
    this covers every weight.  The message space is walked in blocks by the
    position of that leading coordinate, each block evaluated independently;
    the result is the min over blocks and does not depend on the split.
    """
    import numpy as np

    G = generator_matrix(q, m, nu)
    field = G.field
    basis = row_basis(G)
    k = len(basis)
    classes = (q ** k - 1) // (q - 1)
    if classes > budget:
        raise BudgetExceeded(classes, budget)

    add, mul = field.op_tables()
    n = len(G.points)
    dt = add.dtype
    # span holds all combinations of the rows below the current leading index
    span = np.zeros((1, n), dtype=dt)
    best = n + 1
    for i in range(k - 1, -1, -1):
        row = np.array(basis[i], dtype=dt)
        block = add[span, row[None, :]]
        best = min(best, int(np.count_nonzero(block, axis=1).min()))
        if i > 0:
            scaled = [mul[c][row] for c in range(1, q)]
            span = np.concatenate([span] + [add[span, s[None, :]] for s in scaled])
    return best


def verify_no_single_nonvanishing(q: int, m: int, budget: int = 2_000_000) -> bool:
    """True iff no nonzero homogeneous polynomial of degree <= m(q-1) is
    nonzero at exactly one point of P^m, checked by per-degree exhaustive
    minimum-weight search."""
    for nu in range(1, m * (q - 1) + 1):
        if min_weight_exhaustive(q, m, nu, budget) < 2:
            return False
    return True


# -- serialization ------------------------------------------------------


def matrix_to_csv(G: GenMatrix) -> str:
    lines = [",".join(str(x) for x in row) for row in G.entries]
    return "\n".join(lines)


def matrix_to_json(G: GenMatrix) -> str:
    return json.dumps({
        "q": G.q,
        "m": G.m,
        "nu": G.nu,
        "rows": [list(exp) for exp in G.monomials],
        "points": [list(p) for p in G.points],
        "entries": [list(row) for row in G.entries],
    })
