"""Sparse homogeneous polynomials in m+1 variables over GF(q)."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ArityMismatch
from .gf import FieldSpec


@dataclass(frozen=True)
class HomPoly:
    """Homogeneous polynomial: map from exponent vectors to nonzero coefficients.

    Every exponent vector has length nvars and sums to degree; the zero
    polynomial has an empty terms map.  Instances are treated as immutable.
    """

    nvars: int
    degree: int
    terms: dict
    field: FieldSpec

    def __post_init__(self):
        for exp, c in self.terms.items():
            if len(exp) != self.nvars or sum(exp) != self.degree:
                raise ValueError(f"bad exponent vector {exp} for degree {self.degree}")
            if c == 0:
                raise ValueError("stored coefficients must be nonzero")

    def is_zero(self):
        return not self.terms

    def evaluate(self, point):
        """Value at a coordinate vector, with the convention 0^0 = 1."""
        if len(point) != self.nvars:
            raise ArityMismatch(f"point has {len(point)} coords, polynomial has {self.nvars} variables")
        f = self.field
        acc = 0
        for exp, coeff in self.terms.items():
            term = coeff
            for x, e in zip(point, exp):
                if e:
                    if x == 0:
                        term = 0
                        break
                    term = f.mul(term, f.pow(x, e))
            if term:
                acc = f.add(acc, term)
        return acc

    def multiply(self, other: "HomPoly") -> "HomPoly":
        """Product, with cancellation of terms that sum to zero."""
        if self.nvars != other.nvars:
            raise ArityMismatch(f"{self.nvars} vs {other.nvars} variables")
        f = self.field
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = f.add(out.get(e, 0), f.mul(c1, c2))
                if c:
                    out[e] = c
                else:
                    out.pop(e, None)
        return HomPoly(self.nvars, self.degree + other.degree, out, f)

    def __mul__(self, other):
        return self.multiply(other)

    def add_poly(self, other: "HomPoly") -> "HomPoly":
        """Term-wise sum of two polynomials of equal degree."""
        if self.nvars != other.nvars:
            raise ArityMismatch(f"{self.nvars} vs {other.nvars} variables")
        if self.degree != other.degree and self.terms and other.terms:
            raise ValueError("can only add polynomials of equal degree")
        f = self.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = f.add(out.get(e, 0), c)
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return HomPoly(self.nvars, self.degree, out, f)

    def scale(self, c) -> "HomPoly":
        if c == 0:
            return HomPoly(self.nvars, self.degree, {}, self.field)
        f = self.field
        return HomPoly(self.nvars, self.degree,
                       {e: f.mul(c, x) for e, x in self.terms.items()}, f)

    def sorted_terms(self):
        """Terms in the normative order: lex-descending on exponent vectors."""
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            mono = "*".join(
                f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(exp) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)


def zero_poly(nvars, degree, field):
    return HomPoly(nvars, degree, {}, field)


def zero_set(F: HomPoly, m: int):
    """All canonical points of P^m where F vanishes (all of P^m for F = 0)."""
    from .projgeom import enumerate_points

    return [p for p in enumerate_points(m, F.field) if F.evaluate(p) == 0]


def nonvanishing_set(F: HomPoly, m: int):
    from .projgeom import enumerate_points

    return [p for p in enumerate_points(m, F.field) if F.evaluate(p) != 0]


def random_poly(nvars, degree, field, rng) -> HomPoly:
    """Uniformly random homogeneous polynomial (possibly zero)."""
    from .prm import monomials

    terms = {}
    for exp in monomials(nvars - 1, degree):
        c = rng.randrange(field.q)
        if c:
            terms[exp] = c
    return HomPoly(nvars, degree, terms, field)


def parse_poly(text, nvars, field: FieldSpec) -> HomPoly:
    """Polynomial text format: one term per line, `coeff; e0,e1,...,em`.

    Degree is inferred from the terms and validated for homogeneity.
    """
    terms = {}
    degree = None
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#")[0].strip()
        if not line:
            continue
        coeff_s, exps_s = line.split(";")
        coeff = int(coeff_s)
        exp = tuple(int(x) for x in exps_s.split(","))
        if len(exp) != nvars:
            raise ArityMismatch(f"line {lineno}: expected {nvars} exponents")
        if not 0 <= coeff < field.q:
            raise ValueError(f"line {lineno}: coefficient out of range for {field}")
        d = sum(exp)
        if degree is None:
            degree = d
        elif d != degree:
            raise ValueError(f"line {lineno}: degree {d} breaks homogeneity (expected {degree})")
        if coeff:
            c = field.add(terms.get(exp, 0), coeff)
            if c:
                terms[exp] = c
            else:
                terms.pop(exp, None)
    if degree is None:
        raise ValueError("empty polynomial input (degree cannot be inferred)")
    return HomPoly(nvars, degree, terms, field)


def format_poly(F: HomPoly):
    return "\n".join(f"{c}; {','.join(str(e) for e in exp)}" for exp, c in F.sorted_terms())
