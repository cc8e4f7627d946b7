import pytest

from hodgecalc import ContractError, StructuralError
from hodgecalc.algebras import (
    AlgebraPresentation, dimension_table, free_presentation,
)
from hodgecalc.catalog import get_scenario
from hodgecalc.polynomials import GF2, Polynomial, PrimeField, variable_set
from hodgecalc.spectral import (
    BigradedDimensionTable, ModelSpectralSequence, QuotientTwist,
    SurvivorFactor, TransgressiveFactor, abutment_check, column_table,
    e2_table, einfty_oracle, einfty_table, odd_antidiagonals, zeeman_certify,
)

MODEL_SCENARIOS = ("g2", "spin7", "spin8", "spin9", "spin10", "spin11")


def _free(spec):
    return free_presentation(variable_set(spec), GF2)


@pytest.fixture
def g2_model():
    return get_scenario("g2").model


def test_survivor_validation():
    with pytest.raises(StructuralError):
        SurvivorFactor((2, 4))
    with pytest.raises(StructuralError):
        SurvivorFactor((0, 0, 2))
    with pytest.raises(StructuralError):
        SurvivorFactor((0, 3))


def test_twist_validation():
    inv = _free([("y4", 4), ("y10", 10)])
    transg = (TransgressiveFactor(6, "y7"), TransgressiveFactor(10, "y11"))
    with pytest.raises(StructuralError):
        # inhomogeneous: 11 + 4 != 7 + 10
        ModelSpectralSequence(SurvivorFactor((0,)), transg, inv,
                              QuotientTwist(((1, "y4"), (0, "y10"))))
    with pytest.raises(StructuralError):
        # leading term must carry the top target degree
        ModelSpectralSequence(SurvivorFactor((0,)), transg, inv,
                              QuotientTwist(((0, "y10"), (1, "y4"))))
    with pytest.raises(StructuralError):
        ModelSpectralSequence(SurvivorFactor((0,)), transg, inv,
                              QuotientTwist(((5, "y4"),)))


def test_target_name_collision_rejected():
    inv = _free([("y7", 7)])
    with pytest.raises(StructuralError):
        ModelSpectralSequence(SurvivorFactor((0,)),
                              (TransgressiveFactor(6, "y7"),), inv)


def test_g2_cells(g2_model):
    e2 = e2_table(g2_model, 12)
    assert e2.get(0, 6) == 1
    assert e2.get(0, 0) == 1
    einf = einfty_table(g2_model, 40)
    assert einf.get(0, 6) == 0
    assert einf.get(7, 0) == 0  # the transgression target dies against w


def test_spin7_cell():
    model = get_scenario("spin7").model
    assert e2_table(model, 8).get(4, 2) == 1
    assert einfty_table(model, 40).get(4, 2) == 1


def test_spin11_cell():
    model = get_scenario("spin11").model
    assert einfty_table(model, 40).get(6, 10) == 2


def test_spin10_twist_block_survives():
    # at (10, 6) the twisted model keeps the e3-paired class riding on the
    # degree-10 row generator: 2 survivor-block classes plus 1 twist class
    model = get_scenario("spin10").model
    assert e2_table(model, 40).get(10, 6) == 4
    assert einfty_table(model, 40).get(10, 6) == 3
    untwisted = ModelSpectralSequence(model.survivors, model.transgressives,
                                      model.row)
    assert einfty_table(untwisted, 40).get(10, 6) == 2


def test_contractible_transgressive_model():
    model = ModelSpectralSequence(SurvivorFactor((0,)),
                                  (TransgressiveFactor(6, "y"),), _free([]))
    einf = einfty_table(model, 30)
    assert dict(einf.items()) == {(0, 0): 1}


def test_zero_differential_model_has_einfty_equal_e2():
    inv = _free([("y4", 4)])
    model = ModelSpectralSequence(SurvivorFactor((0, 2)), (), inv)
    assert e2_table(model, 20) == einfty_table(model, 20)


def test_rule_matches_oracle_for_all_models():
    for name in MODEL_SCENARIOS:
        model = get_scenario(name).model
        assert einfty_table(model, 40, verify=False) == einfty_oracle(model, 40), name


def test_e2_matches_oracle_before_differentials():
    # a model with no transgressions has oracle == twisted E2 == E-infinity
    inv = _free([("y4", 4), ("y6", 6)])
    model = ModelSpectralSequence(SurvivorFactor((0, 2)), (), inv)
    assert e2_table(model, 16) == einfty_oracle(model, 16)


def test_einfty_below_e2_entrywise():
    for name in MODEL_SCENARIOS:
        model = get_scenario(name).model
        e2 = e2_table(model, 40)
        einf = einfty_table(model, 40)
        for (i, j), v in einf.items():
            assert v <= e2.get(i, j), (name, i, j)


def test_odd_antidiagonals_vanish():
    for name in MODEL_SCENARIOS:
        model = get_scenario(name).model
        assert odd_antidiagonals(einfty_table(model, 40)) == [], name


def test_differential_bidegree_shift():
    # single transgression at m=2: classes (0,2),(3,0),(3,2),(6,0),... pair off
    inv = _free([])
    model = ModelSpectralSequence(SurvivorFactor((0,)),
                                  (TransgressiveFactor(2, "y"),), inv)
    e2 = e2_table(model, 12)
    assert e2.get(0, 2) == 1 and e2.get(3, 0) == 1 and e2.get(3, 2) == 1
    einf = einfty_oracle(model, 12)
    assert dict(einf.items()) == {(0, 0): 1}


def test_column_tables_match_scenario_columns():
    for name in MODEL_SCENARIOS:
        sc = get_scenario(name)
        got = column_table(sc.model, 40)
        want = dimension_table(sc.column_ring, 40)
        assert got.entries == want.entries, name


def test_abutment_check_catches_wrong_abutment(g2_model):
    wrong = _free([("x1", 2), ("x2", 4), ("x3", 6)])
    report = abutment_check(g2_model, wrong, 20)
    assert not report.passed
    assert report.failures[0][0] == 6


def test_untwisted_row_series_identity():
    # candidate table = invariants table convolved with the free targets
    for name in ("g2", "spin7", "spin8", "spin9"):
        sc = get_scenario(name)
        cand = dimension_table(sc.candidate_ring, 40)
        inv = dimension_table(sc.invariants_ring, 40)
        targets = _free([(t.target_name, t.target_degree)
                         for t in sc.model.transgressives])
        tdim = dimension_table(targets, 40)
        conv = [sum(inv[k] * tdim[d - k] for k in range(d + 1)) for d in range(41)]
        assert list(cand) == conv, name


def test_zeeman_certifies_g2(g2_model):
    sc = get_scenario("g2")
    cert = zeeman_certify(g2_model, sc.candidate_ring, sc.column_ring,
                          sc.abutment_ring, 40)
    assert cert.certified and cert.certified_through == 39


def test_zeeman_refuses_candidate_without_y7(g2_model):
    sc = get_scenario("g2")
    shrunk = _free([("y4", 4), ("y6", 6)])
    cert = zeeman_certify(g2_model, shrunk, sc.column_ring, sc.abutment_ring, 40)
    assert not cert.certified
    assert ("candidate-row", 7) in cert.failures


def test_oracle_refuses_odd_characteristic():
    f3 = PrimeField(3)
    inv = free_presentation(variable_set([("y4", 4)]), f3)
    model = ModelSpectralSequence(SurvivorFactor((0,)), (), inv)
    with pytest.raises(ContractError):
        einfty_oracle(model, 10)


def test_oracle_requires_free_row():
    vs = variable_set([("a", 2)])
    a = Polynomial.gen(vs, GF2, "a")
    row = AlgebraPresentation(vs, (a ** 2,), GF2)
    model = ModelSpectralSequence(SurvivorFactor((0,)), (), row)
    with pytest.raises(ContractError):
        einfty_oracle(model, 10)


def test_twist_degree_seventeen():
    for name in ("spin10", "spin11"):
        model = get_scenario(name).model
        assert model.twist_degree() == 17


def test_bigraded_table_first_quadrant():
    t = BigradedDimensionTable(4, {(0, 0): 1, (2, 1): 3})
    assert t.get(1, 1) == 0
    assert t.antidiagonal(3) == 3
