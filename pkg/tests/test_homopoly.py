import random

import pytest

from prmcodes import gf, homopoly, projgeom
from prmcodes.errors import ArityMismatch
from prmcodes.homopoly import HomPoly

F2 = gf.make_field(2, 1)
F3 = gf.make_field(3, 1)
F4 = gf.make_field(2, 2)


def test_evaluate_examples():
    F = HomPoly(3, 2, {(2, 0, 0): 1, (0, 1, 1): 1}, F2)
    assert F.evaluate((1, 1, 1)) == 0
    G = HomPoly(3, 1, {(1, 0, 0): 1}, F2)
    assert G.evaluate((0, 1, 0)) == 0
    with pytest.raises(ArityMismatch):
        G.evaluate((1, 0))


def test_zero_exponent_convention():
    # 0^0 = 1: a term with exponent 0 in a zero coordinate still contributes
    F = HomPoly(3, 1, {(0, 1, 0): 1}, F3)
    assert F.evaluate((0, 1, 0)) == 1


def test_invalid_terms_rejected():
    with pytest.raises(ValueError):
        HomPoly(3, 2, {(1, 0, 0): 1}, F2)  # degree mismatch
    with pytest.raises(ValueError):
        HomPoly(3, 1, {(1, 0, 0): 0}, F2)  # zero coefficient


def test_homogeneity():
    rng = random.Random(5)
    for field, m, deg in ((F2, 2, 2), (F3, 2, 3), (F4, 2, 2)):
        for _ in range(20):
            F = homopoly.random_poly(m + 1, deg, field, rng)
            v = tuple(rng.randrange(field.q) for _ in range(m + 1))
            if not any(v):
                continue
            for lam in range(1, field.q):
                w = tuple(field.mul(lam, x) for x in v)
                assert F.evaluate(w) == field.mul(field.pow(lam, deg), F.evaluate(v))


def test_multiply_examples():
    x0 = HomPoly(3, 1, {(1, 0, 0): 1}, F2)
    x1 = HomPoly(3, 1, {(0, 1, 0): 1}, F2)
    prod = x0.multiply(x1)
    assert prod.degree == 2 and prod.terms == {(1, 1, 0): 1}
    s = x0.add_poly(x1)
    sq = s.multiply(s)
    assert sq.terms == {(2, 0, 0): 1, (0, 2, 0): 1}  # cross terms cancel in char 2


def test_multiply_is_evaluation_homomorphism():
    rng = random.Random(9)
    for field, m in ((F2, 2), (F3, 2), (F4, 2)):
        pts = projgeom.enumerate_points(m, field)
        for _ in range(20):
            F = homopoly.random_poly(m + 1, 2, field, rng)
            G = homopoly.random_poly(m + 1, 1, field, rng)
            H = F.multiply(G)
            if not H.is_zero():
                assert H.degree == F.degree + G.degree
            for p in pts:
                assert H.evaluate(p) == field.mul(F.evaluate(p), G.evaluate(p))


def test_zero_set_examples():
    x2 = HomPoly(3, 1, {(0, 0, 1): 1}, F2)
    assert homopoly.zero_set(x2, 2) == [(1, 0, 0), (1, 1, 0), (0, 1, 0)]
    x0x1 = HomPoly(3, 2, {(1, 1, 0): 1}, F2)
    zs = homopoly.zero_set(x0x1, 2)
    assert len(zs) == 5
    assert set(projgeom.enumerate_points(2, F2)) - set(zs) == {(1, 1, 0), (1, 1, 1)}


def test_zero_set_of_zero_poly_is_everything():
    z = homopoly.zero_poly(3, 2, F3)
    assert len(homopoly.zero_set(z, 2)) == projgeom.num_points(2, 3)


def test_linear_form_zero_count():
    rng = random.Random(13)
    for field, m in ((F2, 2), (F3, 2), (F3, 3)):
        for _ in range(20):
            F = homopoly.random_poly(m + 1, 1, field, rng)
            if F.is_zero():
                continue
            assert len(homopoly.zero_set(F, m)) == (field.q ** m - 1) // (field.q - 1)


def test_zero_set_of_product_is_union():
    rng = random.Random(17)
    for _ in range(10):
        F = homopoly.random_poly(3, 2, F3, rng)
        G = homopoly.random_poly(3, 1, F3, rng)
        if F.is_zero() or G.is_zero():
            continue
        zs = set(homopoly.zero_set(F.multiply(G), 2))
        assert zs == set(homopoly.zero_set(F, 2)) | set(homopoly.zero_set(G, 2))


def test_poly_text_format_round_trip():
    F = HomPoly(3, 2, {(1, 1, 0): 2, (0, 0, 2): 1}, F3)
    text = homopoly.format_poly(F)
    assert homopoly.parse_poly(text, 3, F3).terms == F.terms
    with pytest.raises(ValueError):
        homopoly.parse_poly("1; 1,0,0\n1; 2,0,0", 3, F3)  # not homogeneous
