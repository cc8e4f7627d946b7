from __future__ import annotations

import random

import pytest

from hodgecalc.algebras import AlgebraPresentation
from hodgecalc.catalog import list_scenarios, run_scenario
from hodgecalc.polynomials import Polynomial, PrimeField, VariableSet

RUN_DEGREE = 40


@pytest.fixture(scope="session")
def reports():
    """One full verification run per catalog scenario, shared by all tests."""
    return {name: run_scenario(name, RUN_DEGREE) for name, _ in list_scenarios()}


def random_poly(rng: random.Random, variables: VariableSet, field: PrimeField,
                max_terms: int = 6, max_exp: int = 3) -> Polynomial:
    coeffs = {}
    for _ in range(rng.randrange(max_terms + 1)):
        mon = tuple(rng.randrange(max_exp + 1) for _ in variables.names)
        coeffs[mon] = rng.randrange(1, field.p)
    return Polynomial.make(variables, field, coeffs)


def reversed_presentation(pres: AlgebraPresentation) -> AlgebraPresentation:
    """The same algebra with its variable order reversed."""
    vs = pres.variables
    order = list(range(len(vs)))[::-1]
    new_vs = VariableSet(tuple(vs.names[i] for i in order),
                         tuple(vs.degrees[i] for i in order),
                         tuple(vs.bidegrees[i] for i in order))

    def remap(p: Polynomial) -> Polynomial:
        return Polynomial.make(new_vs, p.field,
                               {tuple(mon[i] for i in order): c
                                for mon, c in p.terms})

    return AlgebraPresentation(new_vs, tuple(remap(r) for r in pres.relations),
                               pres.field)
