import random

import pytest

from hodgecalc import ContractError, StructuralError
from hodgecalc.polynomials import (
    GF2, LinearElimination, Polynomial, PrimeField, eliminate,
    elementary_symmetric, variable_set,
)

from conftest import random_poly


@pytest.fixture
def tring():
    vs = variable_set([("t1", 2), ("t2", 2), ("t3", 2)])
    gens = {n: Polynomial.gen(vs, GF2, n) for n in vs.names}
    return vs, gens


def test_char2_cancellation(tring):
    _, t = tring
    assert not (t["t1"] + t["t1"])


def test_disjoint_supports_add(tring):
    vs, t = tring
    s = t["t1"] * t["t2"] + t["t2"] * t["t3"]
    assert len(s.terms) == 2
    assert s.homogeneous_degree() == 4


def test_degree17_relation_polynomial():
    vs = variable_set([("u6", 6), ("u7", 7), ("u10", 10), ("u11", 11)])
    u = {n: Polynomial.gen(vs, GF2, n) for n in vs.names}
    rel = u["u7"] * u["u10"] + u["u6"] * u["u11"]
    assert rel.is_homogeneous and rel.homogeneous_degree() == 17
    assert len(rel.terms) == 2


def test_frobenius_square(tring):
    _, t = tring
    assert (t["t1"] + t["t2"]) ** 2 == t["t1"] ** 2 + t["t2"] ** 2


def test_power_is_exponent_addition():
    vs = variable_set([("v", 2)])
    v = Polynomial.gen(vs, GF2, "v")
    assert v * v ** 2 == v ** 3


def test_mul_degree_and_bidegree_addition():
    vs = variable_set([("a", 3, (2, 1)), ("b", 5, (3, 2))])
    a, b = Polynomial.gen(vs, GF2, "a"), Polynomial.gen(vs, GF2, "b")
    assert (a * b).homogeneous_degree() == 8
    mon = (a * b).terms[0][0]
    col = sum(e * vs.bidegrees[i][0] for i, e in enumerate(mon))
    row = sum(e * vs.bidegrees[i][1] for i, e in enumerate(mon))
    assert (col, row) == (5, 3)


def test_homogeneous_product_degree_adds():
    rng = random.Random(23)
    vs = variable_set([("a", 2), ("b", 3), ("c", 5)])

    def random_homogeneous(d):
        mons = vs.monomials_of_degree(d)
        chosen = [m for m in mons if rng.random() < 0.5]
        return Polynomial.make(vs, GF2, {m: 1 for m in chosen})

    for _ in range(200):
        d1, d2 = rng.randrange(2, 12), rng.randrange(2, 12)
        p, q = random_homogeneous(d1), random_homogeneous(d2)
        prod = p * q
        assert prod.is_homogeneous
        if prod:
            assert prod.homogeneous_degree() == d1 + d2


def test_mismatched_variable_sets_raise(tring):
    _, t = tring
    other = variable_set([("z", 1)])
    z = Polynomial.gen(other, GF2, "z")
    with pytest.raises(StructuralError):
        t["t1"] + z
    with pytest.raises(StructuralError):
        t["t1"] * z


def test_canonical_form_unique(tring):
    vs, t = tring
    p1 = (t["t1"] + t["t2"]) * t["t3"]
    p2 = t["t1"] * t["t3"] + t["t3"] * t["t2"]
    assert p1 == p2 and p1.terms == p2.terms


def test_elimination_examples(tring):
    vs, t = tring
    elim = LinearElimination.make(vs, GF2, {"t3": t["t1"] + t["t2"]})
    image = eliminate(t["t1"] * t["t2"] * t["t3"], elim)
    assert image == t["t1"] ** 2 * t["t2"] + t["t1"] * t["t2"] ** 2
    assert not eliminate(t["t1"] + t["t2"] + t["t3"], elim)


def test_elimination_four_variable_expansion():
    # hand-expanded: (t1+t4) t2 t3 with t4 = t1+t2+t3 gives t2^2 t3 + t2 t3^2
    vs = variable_set([("t1", 2), ("t2", 2), ("t3", 2), ("t4", 2)])
    t = {n: Polynomial.gen(vs, GF2, n) for n in vs.names}
    elim = LinearElimination.make(vs, GF2, {"t4": t["t1"] + t["t2"] + t["t3"]})
    got = eliminate((t["t1"] + t["t4"]) * t["t2"] * t["t3"], elim)
    assert got == t["t2"] ** 2 * t["t3"] + t["t2"] * t["t3"] ** 2


def test_elimination_idempotent(tring):
    vs, t = tring
    elim = LinearElimination.make(vs, GF2, {"t3": t["t1"] + t["t2"]})
    rng = random.Random(7)
    for _ in range(50):
        p = random_poly(rng, vs, GF2)
        once = eliminate(p, elim)
        assert eliminate(once, elim) == once


def test_cyclic_substitution_rejected(tring):
    vs, t = tring
    with pytest.raises(StructuralError):
        LinearElimination.make(vs, GF2, {"t3": t["t1"] + t["t3"]})
    with pytest.raises(StructuralError):
        LinearElimination.make(vs, GF2, {"t2": t["t3"], "t3": t["t2"]})


def test_elimination_degree_mismatch_rejected():
    vs = variable_set([("a", 2), ("b", 4)])
    a = Polynomial.gen(vs, GF2, "a")
    with pytest.raises(StructuralError):
        LinearElimination.make(vs, GF2, {"b": a})


def test_elimination_is_ring_homomorphism(tring):
    vs, t = tring
    elim = LinearElimination.make(vs, GF2, {"t3": t["t1"] + t["t2"]})
    rng = random.Random(11)
    for _ in range(100):
        p, q = random_poly(rng, vs, GF2), random_poly(rng, vs, GF2)
        assert eliminate(p * q, elim) == eliminate(p, elim) * eliminate(q, elim)
        assert eliminate(p + q, elim) == eliminate(p, elim) + eliminate(q, elim)


def test_substitute_requires_every_used_variable(tring):
    vs, t = tring
    target = variable_set([("z", 2)])
    z = Polynomial.gen(target, GF2, "z")
    with pytest.raises(StructuralError):
        (t["t1"] * t["t2"]).substitute(target, {"t1": z})


def test_odd_characteristic_arithmetic():
    f3 = PrimeField(3)
    vs = variable_set([("x", 1), ("y", 1)])
    x, y = Polynomial.gen(vs, f3, "x"), Polynomial.gen(vs, f3, "y")
    assert (x + y) ** 3 == x ** 3 + y ** 3
    assert (x + x + x) == Polynomial.zero(vs, f3)
    assert (x - y) + y == x


def test_prime_field_validation():
    with pytest.raises(StructuralError):
        PrimeField(4)
    with pytest.raises(StructuralError):
        PrimeField(1)


def test_variable_set_validation():
    with pytest.raises(StructuralError):
        variable_set([("a", 1), ("a", 2)])
    with pytest.raises(StructuralError):
        variable_set([("a", 0)])
    with pytest.raises(StructuralError):
        variable_set([("a", 3, (1, 1))])


def test_monomial_enumeration_sorted():
    vs = variable_set([("a", 2), ("b", 4), ("c", 6)])
    mons = vs.monomials_of_degree(6)
    assert mons == ((0, 0, 1), (1, 1, 0), (3, 0, 0))
    assert vs.monomials_of_degree(0) == ((0, 0, 0),)
    assert vs.monomials_of_degree(1) == ()


def test_elementary_symmetric():
    vs = variable_set([("t1", 1), ("t2", 1), ("t3", 1)])
    e2 = elementary_symmetric(vs, GF2, ["t1", "t2", "t3"], 2)
    assert len(e2.terms) == 3
    assert e2.homogeneous_degree() == 2
    assert elementary_symmetric(vs, GF2, ["t1", "t2", "t3"], 0) == Polynomial.one(vs, GF2)


def test_homogeneity_checks():
    vs = variable_set([("a", 1), ("b", 2)])
    a, b = Polynomial.gen(vs, GF2, "a"), Polynomial.gen(vs, GF2, "b")
    assert not (a + b).is_homogeneous
    with pytest.raises(ContractError):
        (a + b).homogeneous_degree()
    assert (a ** 2 + b).homogeneous_degree() == 2


def test_serialized_is_sorted():
    vs = variable_set([("a", 1), ("b", 1)])
    a, b = Polynomial.gen(vs, GF2, "a"), Polynomial.gen(vs, GF2, "b")
    ser = (a * b + b ** 2 + a ** 3).serialized()
    degs = [sum(m) for m, _ in ser]
    assert degs == sorted(degs)
