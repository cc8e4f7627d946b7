import pytest

from hodgecalc import ContractError, StructuralError
from hodgecalc.counting import WeightSystem, count_solutions
from hodgecalc.invariants import (
    InvariantPresentationClaim, PermutationAction, invariant_basis,
    monomial_orbit_count, permute_monomial, verify_invariant_presentation,
)
from hodgecalc.polynomials import (
    GF2, LinearElimination, Polynomial, PrimeField, elementary_symmetric,
    variable_set,
)


def sym_action(r, extra_fixed=0, field=GF2, eliminate=False, with_identity=False):
    spec = [(f"x{k}", 1) for k in range(1, r + 1)]
    spec += [("A", 1)] * extra_fixed
    vs = variable_set(spec)
    total = r + extra_fixed
    gens = [tuple([1, 0] + list(range(2, total)))]
    if r > 2:
        gens.append(tuple(list(range(1, r)) + [0] + list(range(r, total))))
    if with_identity:
        gens.append(tuple(range(total)))
    elim = None
    if eliminate:
        rest = Polynomial.zero(vs, field)
        for k in range(1, r):
            rest = rest + Polynomial.gen(vs, field, f"x{k}")
        elim = LinearElimination.make(vs, field, {f"x{r}": rest})
    return PermutationAction(vs, field, tuple(gens), elim)


@pytest.fixture
def weyl_s3():
    return sym_action(3, eliminate=True)


def test_permute_monomial():
    assert permute_monomial((2, 1, 0), (1, 2, 0)) == (0, 2, 1)


def test_s3_dimension_sequence(weyl_s3):
    dims = [len(invariant_basis(weyl_s3, d)) for d in range(11)]
    assert dims[:7] == [1, 0, 1, 1, 1, 1, 2]
    ws = WeightSystem((2, 3))
    assert dims == [count_solutions(ws, d) for d in range(11)]


def test_s3_degree_one_empty(weyl_s3):
    assert invariant_basis(weyl_s3, 1) == []


def test_s3_degree_two_is_second_symmetric(weyl_s3):
    vs = weyl_s3.variables
    e2 = elementary_symmetric(vs, GF2, ["x1", "x2", "x3"], 2)
    basis = invariant_basis(weyl_s3, 2)
    assert basis == [weyl_s3.reduce(e2)]


def test_basis_elements_literally_fixed(weyl_s3):
    for d in range(8):
        for p in invariant_basis(weyl_s3, d):
            for g in weyl_s3.generators:
                assert weyl_s3.apply(p, g) == p


def test_trivial_action_fixes_all_monomials():
    vs = variable_set([("a", 1), ("b", 1)])
    act = PermutationAction(vs, GF2, (), None)
    assert len(invariant_basis(act, 3)) == len(vs.monomials_of_degree(3))


def test_sign_as_identity_companion(weyl_s3):
    full = sym_action(3, eliminate=True, with_identity=True)
    for d in range(9):
        assert len(invariant_basis(full, d)) == len(invariant_basis(weyl_s3, d))


def test_orbit_count_matches_kernel_dimension():
    for r in (2, 3, 4):
        act = sym_action(r)
        for d in range(9):
            assert monomial_orbit_count(act, d) == len(invariant_basis(act, d))


def test_orbit_count_rejects_elimination(weyl_s3):
    with pytest.raises(ContractError):
        monomial_orbit_count(weyl_s3, 2)


def test_orbit_count_valid_in_odd_characteristic():
    act3 = sym_action(2, field=PrimeField(3))
    for d in range(7):
        assert monomial_orbit_count(act3, d) == len(invariant_basis(act3, d))


def test_action_validation():
    vs = variable_set([("a", 1), ("b", 2)])
    with pytest.raises(StructuralError):
        PermutationAction(vs, GF2, ((0, 0),), None)
    with pytest.raises(StructuralError):
        PermutationAction(vs, GF2, ((1, 0),), None)  # degree mismatch


def test_unstable_elimination_rejected():
    vs = variable_set([("x1", 1), ("x2", 1), ("x3", 1)])
    x1 = Polynomial.gen(vs, GF2, "x1")
    elim = LinearElimination.make(vs, GF2, {"x3": x1})
    swap12 = (1, 0, 2)
    with pytest.raises(StructuralError):
        PermutationAction(vs, GF2, (swap12,), elim)


def test_weyl_claim_passes(weyl_s3):
    vs = weyl_s3.variables
    names = ["x1", "x2", "x3"]
    gens = (elementary_symmetric(vs, GF2, names, 2),
            elementary_symmetric(vs, GF2, names, 3))
    claim = InvariantPresentationClaim(weyl_s3, gens, True)
    report = verify_invariant_presentation(claim, 12)
    assert report.passed
    assert [row.fixed_dim for row in report.rows[:7]] == [1, 0, 1, 1, 1, 1, 2]


def test_levi_double_cover_claims_r3_r4():
    for r in (3, 4):
        act = sym_action(r, extra_fixed=1, eliminate=True)
        vs = act.variables
        names = [f"x{k}" for k in range(1, r + 1)]
        gens = [Polynomial.gen(vs, GF2, "A")]
        gens += [elementary_symmetric(vs, GF2, names, m) for m in range(2, r + 1)]
        claim = InvariantPresentationClaim(act, tuple(gens), True)
        assert verify_invariant_presentation(claim, 10).passed, r


def test_rank_two_double_cover_degenerates():
    # With x1 + x2 = 0 in characteristic 2 the swap acts trivially, so the
    # fixed subspace is the whole ring and the k[A, c2] presentation is
    # genuinely false from degree 1 on.  The rank-2 Levi that actually
    # occurs in the catalog is the plain GL(2) one on a free ring.
    act = sym_action(2, extra_fixed=1, eliminate=True)
    vs = act.variables
    assert act.apply(Polynomial.gen(vs, GF2, "x1"), (1, 0, 2)) == \
        act.reduce(Polynomial.gen(vs, GF2, "x1"))
    for d in range(6):
        assert len(invariant_basis(act, d)) == len(act.monomials(d))
    gens = (Polynomial.gen(vs, GF2, "A"),
            elementary_symmetric(vs, GF2, ["x1", "x2"], 2))
    claim = InvariantPresentationClaim(act, gens, True)
    report = verify_invariant_presentation(claim, 6)
    assert not report.passed
    assert report.failures[0][0] == 1


def test_non_invariant_generator_fails_at_its_degree(weyl_s3):
    vs = weyl_s3.variables
    claim = InvariantPresentationClaim(
        weyl_s3, (Polynomial.gen(vs, GF2, "x1"),), False)
    report = verify_invariant_presentation(claim, 4)
    assert not report.passed
    assert report.failures[0][0] == 1


def test_incomplete_generators_fail_span_check(weyl_s3):
    vs = weyl_s3.variables
    e2 = elementary_symmetric(vs, GF2, ["x1", "x2", "x3"], 2)
    claim = InvariantPresentationClaim(weyl_s3, (e2,), False)
    report = verify_invariant_presentation(claim, 6)
    assert not report.passed
    assert any(d == 3 for d, _ in report.failures)  # misses the cubic invariant
