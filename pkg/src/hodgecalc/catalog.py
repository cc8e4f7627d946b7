"""Built-in catalog of groups and the end-to-end verification pipeline.

Each scenario bundles the exact data one verification run consumes:
the flag-variety column ring, the Levi abutment ring, the invariant
subring filling the permanent row, the model spectral sequence with its
optional quotient twist, the candidate answer ring, the singular
presentation it is compared against, split-bijection specs, restriction
plans for relation discovery, and the degeneration flag under which the
certified table is emitted as the de Rham table.

Everything is characteristic 2; the CLI rejects other primes before
reaching this module.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from . import ContractError
from .algebras import (
    AlgebraPresentation, dimension_table, free_presentation,
)
from .counting import (
    SplitBijectionSpec, WeightSystem, compare_tables, verify_split_bijection,
)
from .invariants import (
    InvariantPresentationClaim, PermutationAction, invariant_basis,
    verify_invariant_presentation,
)
from .polynomials import (
    GF2, LinearElimination, Polynomial, elementary_symmetric, variable_set,
)
from .reporting import Check, Report, check
from .restriction import RestrictionPlan, collapse_to_k, discover_relation, u_pullback
from .spectral import (
    ModelSpectralSequence, QuotientTwist, SurvivorFactor, TransgressiveFactor,
    abutment_check, einfty_oracle, einfty_table, odd_antidiagonals, zeeman_certify,
)


class UnknownScenarioError(ContractError):
    """Requested scenario is not in the catalog."""


@dataclass(frozen=True)
class NamedClaim:
    """An invariant-ring presentation claim with a verification bound.

    ``companion`` optionally names a second action whose fixed-space
    dimensions must coincide degree for degree (used to confirm that a
    central factor acting as the identity changes nothing).
    """

    name: str
    claim: InvariantPresentationClaim
    max_degree: int
    companion: PermutationAction | None = None


@dataclass(frozen=True)
class DiscoveryPlan:
    """Restriction plan plus the parallel u- and candidate-monomial lists."""

    name: str
    plan: RestrictionPlan
    u_candidates: tuple[Polynomial, ...]
    y_candidates: tuple[Polynomial, ...]


@dataclass(frozen=True)
class Scenario:
    name: str
    description: str
    candidate_ring: AlgebraPresentation
    singular_ring: AlgebraPresentation
    comparison_mode: str  # "equal" | "dominates"
    invariants_ring: AlgebraPresentation | None = None
    column_ring: AlgebraPresentation | None = None
    abutment_ring: AlgebraPresentation | None = None
    model: ModelSpectralSequence | None = None
    invariant_claims: tuple[NamedClaim, ...] = ()
    split_bijections: tuple[tuple[str, SplitBijectionSpec], ...] = ()
    discoveries: tuple[DiscoveryPlan, ...] = ()
    witnesses: tuple[str, ...] = ()
    hodge_degeneration_assumed: bool = True
    degeneration_note: str = ""
    footnotes: tuple[str, ...] = ()


def _free(spec) -> AlgebraPresentation:
    return free_presentation(variable_set(spec), GF2)


def _sym_action(n_moved: int, with_A: bool = False, include_identity: bool = False,
                eliminate_last: bool = True) -> PermutationAction:
    """S_n permuting the first n degree-1 variables of k[x_1..x_n(, A)].

    With ``eliminate_last`` the ring is cut by x_1 + ... + x_n = 0,
    realized by eliminating x_n.
    """
    spec = [(f"x{k}", 1) for k in range(1, n_moved + 1)]
    if with_A:
        spec.append(("A", 1))
    total = len(spec)
    vs = variable_set(spec)
    swap = tuple([1, 0] + list(range(2, total)))
    cycle = tuple(list(range(1, n_moved)) + [0] + list(range(n_moved, total)))
    gens = [swap, cycle] if n_moved > 2 else [swap]
    if include_identity:
        gens.append(tuple(range(total)))
    elim = None
    if eliminate_last:
        rest = Polynomial.zero(vs, GF2)
        for k in range(1, n_moved):
            rest = rest + Polynomial.gen(vs, GF2, f"x{k}")
        elim = LinearElimination.make(vs, GF2, {f"x{n_moved}": rest})
    return PermutationAction(vs, GF2, tuple(gens), elim)


def _levi_claim(r: int, max_degree: int = 10) -> NamedClaim:
    """Double-cover Levi invariants: (k[x_1..x_r, A]/(sum x))^{S_r}."""
    action = _sym_action(r, with_A=True)
    vs = action.variables
    xnames = [f"x{k}" for k in range(1, r + 1)]
    gens = [Polynomial.gen(vs, GF2, "A")]
    gens += [elementary_symmetric(vs, GF2, xnames, m) for m in range(2, r + 1)]
    return NamedClaim(f"levi-sym{r}", InvariantPresentationClaim(action, tuple(gens), True),
                      max_degree)


_DEGENERATION_NOTE = ("ring generators sit in diagonal and near-diagonal Hodge "
                      "bidegrees, so the Hodge-to-de-Rham spectral sequence "
                      "degenerates and the de Rham table equals the Hodge table")

_KFORM_NOTE = ("tables are invariant under base field extension, so every "
               "form of the group over a characteristic-2 field has the same tables")


@functools.lru_cache(maxsize=None)
def _g2_scenario() -> Scenario:
    column = AlgebraPresentation(
        variable_set([("v", 2, (1, 1)), ("w", 6, (3, 3))]), (), GF2)
    v = column.gen("v")
    w = column.gen("w")
    column = AlgebraPresentation(column.variables, (v ** 3, w ** 2), GF2)
    abutment = _free([("x1", 2, (1, 1)), ("x2", 4, (2, 2))])
    invariants = _free([("y4", 4, (2, 2)), ("y6", 6, (3, 3))])
    candidate = _free([("y4", 4, (2, 2)), ("y6", 6, (3, 3)), ("y7", 7, (4, 3))])
    model = ModelSpectralSequence(
        SurvivorFactor((0, 2, 4)), (TransgressiveFactor(6, "y7"),), invariants)

    weyl = _sym_action(3)
    tnames = ["x1", "x2", "x3"]
    e2 = elementary_symmetric(weyl.variables, GF2, tnames, 2)
    e3 = elementary_symmetric(weyl.variables, GF2, tnames, 3)
    weyl_claim = NamedClaim(
        "weyl-sym3",
        InvariantPresentationClaim(weyl, (e2, e3), True), 10,
        companion=_sym_action(3, include_identity=True))
    torus = _sym_action(2, eliminate_last=False)
    e1t = elementary_symmetric(torus.variables, GF2, ["x1", "x2"], 1)
    e2t = elementary_symmetric(torus.variables, GF2, ["x1", "x2"], 2)
    levi_claim = NamedClaim(
        "levi-sym2", InvariantPresentationClaim(torus, (e1t, e2t), True), 10)

    return Scenario(
        name="g2",
        description="exceptional group G2: free answer ring on degrees 4, 6, 7",
        candidate_ring=candidate,
        singular_ring=candidate,
        comparison_mode="equal",
        invariants_ring=invariants,
        column_ring=column,
        abutment_ring=abutment,
        model=model,
        invariant_claims=(weyl_claim, levi_claim),
        split_bijections=(("g2", SplitBijectionSpec(2, 3, WeightSystem((4,)))),),
        hodge_degeneration_assumed=True,
        degeneration_note=_DEGENERATION_NOTE,
        footnotes=(_KFORM_NOTE,
                   "the central order-2 factor of the Weyl group acts as the "
                   "identity in characteristic 2; the claim is rerun with it "
                   "adjoined and must not change"),
    )


_SPIN_DATA = {
    7: dict(survivors=(0, 2, 4, 6),
            invariants=[("y4", 4, (2, 2)), ("y6", 6, (3, 3)), ("y8", 8, (4, 4))],
            extra=[("y7", 7, (4, 3))],
            order=["y4", "y6", "y7", "y8"],
            split=SplitBijectionSpec(2, 4, WeightSystem((4, 6))),
            relation=None),
    8: dict(survivors=(0, 2, 4, 6),
            invariants=[("y4", 4, (2, 2)), ("y6", 6, (3, 3)), ("y8", 8, (4, 4)),
                        ("y8p", 8, (4, 4))],
            extra=[("y7", 7, (4, 3))],
            order=["y4", "y6", "y7", "y8", "y8p"],
            split=SplitBijectionSpec(2, 4, WeightSystem((4, 6, 8))),
            relation=None),
    9: dict(survivors=(0, 2, 4, 6, 8, 10, 12, 14),
            invariants=[("y4", 4, (2, 2)), ("y6", 6, (3, 3)), ("y8", 8, (4, 4)),
                        ("y16", 16, (8, 8))],
            extra=[("y7", 7, (4, 3))],
            order=["y4", "y6", "y7", "y8", "y16"],
            split=SplitBijectionSpec(2, 8, WeightSystem((4, 6, 8))),
            relation=None),
    10: dict(survivors=(0, 2, 4, 6, 8, 10, 12, 14),
             invariants=[("y4", 4, (2, 2)), ("y6", 6, (3, 3)), ("y8", 8, (4, 4)),
                         ("y10", 10, (5, 5)), ("y32", 32, (16, 16))],
             extra=[("y7", 7, (4, 3))],
             order=["y4", "y6", "y7", "y8", "y10", "y32"],
             split=SplitBijectionSpec(2, 16, WeightSystem((4, 6, 8, 10))),
             relation=[["y7", "y10"]]),
    11: dict(survivors=(0, 2, 4, 6, 8, 10, 12, 14),
             invariants=[("y4", 4, (2, 2)), ("y6", 6, (3, 3)), ("y8", 8, (4, 4)),
                         ("y10", 10, (5, 5)), ("y32", 32, (16, 16))],
             extra=[("y7", 7, (4, 3)), ("y11", 11, (6, 5))],
             order=["y4", "y6", "y7", "y8", "y10", "y11", "y32"],
             split=SplitBijectionSpec(2, 16, WeightSystem((4, 6, 8, 10))),
             relation=[["y7", "y10"], ["y6", "y11"]]),
}


def _spin_column(n: int) -> AlgebraPresentation:
    """k[e_1..e_s]/(e_i^2 = e_{2i}), e_m = 0 beyond s = floor((n-1)/2)."""
    s = (n - 1) // 2
    vs = variable_set([(f"e{i}", 2 * i, (i, i)) for i in range(1, s + 1)])
    relations = []
    for i in range(1, s + 1):
        sq = Polynomial.gen(vs, GF2, f"e{i}", 2)
        if 2 * i <= s:
            sq = sq + Polynomial.gen(vs, GF2, f"e{2 * i}")
        relations.append(sq)
    return AlgebraPresentation(vs, tuple(relations), GF2)


def _monomial(pres: AlgebraPresentation, names: list[str]) -> Polynomial:
    out = Polynomial.one(pres.variables, pres.field)
    for n in names:
        out = out * pres.gen(n)
    return out


@functools.lru_cache(maxsize=None)
def _spin_scenario(n: int) -> Scenario:
    data = _SPIN_DATA[n]
    r = n // 2
    invariants = _free(data["invariants"])
    by_name = {e[0]: e for e in data["invariants"] + data["extra"]}
    cand_vs = variable_set([by_name[name] for name in data["order"]])
    relations = []
    if data["relation"]:
        rel = Polynomial.zero(cand_vs, GF2)
        for names in data["relation"]:
            rel = rel + _monomial(free_presentation(cand_vs, GF2), names)
        relations.append(rel)
    candidate = AlgebraPresentation(cand_vs, tuple(relations), GF2)

    abutment = _free([("A", 2, (1, 1))]
                     + [(f"c{i}", 2 * i, (i, i)) for i in range(2, r + 1)])
    transgressives = [TransgressiveFactor(6, "y7")]
    twist = None
    if n == 10:
        twist = QuotientTwist(((0, "y10"),))
    elif n == 11:
        transgressives.append(TransgressiveFactor(10, "y11"))
        twist = QuotientTwist(((1, "y6"), (0, "y10")))
    model = ModelSpectralSequence(SurvivorFactor(data["survivors"]),
                                  tuple(transgressives), invariants, twist)

    discoveries = []
    if n == 10:
        plan = RestrictionPlan(8, 10)
        u = {m: plan.source.gen(m) for m in plan.source.variables.names}
        discoveries.append(DiscoveryPlan(
            "so8-evaluation", plan,
            (u["u7"] * u["u4"] * u["u6"], u["u7"] * u["u10"]),
            (_monomial(candidate, ["y7", "y4", "y6"]),
             _monomial(candidate, ["y7", "y10"]))))
    elif n == 11:
        plan = RestrictionPlan(11)
        u = {m: plan.source.gen(m) for m in plan.source.variables.names}
        discoveries.append(DiscoveryPlan(
            "so11-collapse", plan,
            (u["u11"] * u["u6"], u["u7"] * u["u10"],
             u["u7"] * u["u4"] * u["u6"]),
            (_monomial(candidate, ["y11", "y6"]),
             _monomial(candidate, ["y7", "y10"]),
             _monomial(candidate, ["y7", "y4", "y6"]))))

    if n == 11:
        singular = AlgebraPresentation(
            variable_set([("w4", 4), ("w6", 6), ("w7", 7), ("w8", 8),
                          ("w10", 10), ("w11", 11), ("w64", 64)]),
            (), GF2)
        w = {m: singular.gen(m) for m in singular.variables.names}
        singular = AlgebraPresentation(
            singular.variables,
            (w["w7"] * w["w10"] + w["w6"] * w["w11"],
             w["w11"] ** 3 + w["w11"] ** 2 * w["w7"] * w["w4"]
             + w["w11"] * w["w8"] * w["w7"] ** 2),
            GF2)
        mode = "dominates"
    else:
        singular = candidate
        mode = "equal"

    footnotes = [_KFORM_NOTE]
    if any(name in ("y16", "y32") for name in data["order"]):
        top = "y32" if "y32" in data["order"] else "y16"
        footnotes.append(
            f"the Hodge bidegree of {top} is recorded as the diagonal one, "
            "inferred from its membership in the diagonal invariant subring")
    if discoveries:
        footnotes.append(
            "generator correspondence under the orthogonal restriction "
            "(u_i to the class of the same degree) is recorded as scenario data")

    return Scenario(
        name=f"spin{n}",
        description={
            7: "Spin(7): free answer ring on degrees 4, 6, 7, 8",
            8: "Spin(8): free answer ring on degrees 4, 6, 7, 8, 8",
            9: "Spin(9): free answer ring on degrees 4, 6, 7, 8, 16",
            10: "Spin(10): one relation in degree 17 and a degree-32 generator",
            11: "Spin(11): binomial relation in degree 17 and a degree-32 generator",
        }[n],
        candidate_ring=candidate,
        singular_ring=singular,
        comparison_mode=mode,
        invariants_ring=invariants,
        column_ring=_spin_column(n),
        abutment_ring=abutment,
        model=model,
        invariant_claims=(_levi_claim(r),),
        split_bijections=((f"spin{n}", data["split"]),),
        discoveries=tuple(discoveries),
        hodge_degeneration_assumed=True,
        degeneration_note=_DEGENERATION_NOTE,
        footnotes=tuple(footnotes),
    )


@functools.lru_cache(maxsize=None)
def _so_baseline_scenario() -> Scenario:
    ring = _free([(f"u{i}", i) for i in range(2, 12)])
    return Scenario(
        name="so-baseline",
        description="SO(11) baseline: free ring on u_2..u_11, singular equals de Rham",
        candidate_ring=ring,
        singular_ring=ring,
        comparison_mode="equal",
        witnesses=("so11-odd-classes-survive", "so8-u7-collapse-formula"),
        hodge_degeneration_assumed=True,
        degeneration_note=_DEGENERATION_NOTE,
        footnotes=(_KFORM_NOTE,),
    )


_CATALOG_BUILDERS = {
    "g2": _g2_scenario,
    "spin7": lambda: _spin_scenario(7),
    "spin8": lambda: _spin_scenario(8),
    "spin9": lambda: _spin_scenario(9),
    "spin10": lambda: _spin_scenario(10),
    "spin11": lambda: _spin_scenario(11),
    "so-baseline": _so_baseline_scenario,
}


def list_scenarios() -> list[tuple[str, str]]:
    return [(name, build().description) for name, build in _CATALOG_BUILDERS.items()]


def get_scenario(name: str) -> Scenario:
    try:
        return _CATALOG_BUILDERS[name]()
    except KeyError:
        raise UnknownScenarioError(f"unknown scenario {name!r}") from None


# ---------------------------------------------------------------------------
# witness checks


def _witness_so11_odd_classes() -> tuple[bool, str]:
    """u7 and u11 collapse to s*e3 and s*e5, both nonzero."""
    plan = RestrictionPlan(11)
    kv = plan.k_target.variables
    s = Polynomial.gen(kv, GF2, "s1")
    tnames = [f"t{k}" for k in range(1, 6)]
    ok = True
    parts = []
    for i, m in ((7, 3), (11, 5)):
        img = collapse_to_k(u_pullback(i, plan), plan)
        expected = plan.k_target.reduce(
            s * elementary_symmetric(kv, GF2, tnames, m))
        good = bool(img) and img == expected
        ok = ok and good
        parts.append(f"u{i} -> s*e{m}(t), nonzero: {good}")
    return ok, "; ".join(parts)


def _witness_so8_u7_formula() -> tuple[bool, str]:
    """The u7 collapse for SO(8) equals s * sum (t_a + t_b) t_a t_b, a<b<=3."""
    plan = RestrictionPlan(8)
    kv = plan.k_target.variables
    s = Polynomial.gen(kv, GF2, "s1")
    t = {n: Polynomial.gen(kv, GF2, n) for n in ("t1", "t2", "t3")}
    expected = Polynomial.zero(kv, GF2)
    for a, b in (("t1", "t2"), ("t1", "t3"), ("t2", "t3")):
        expected = expected + (t[a] + t[b]) * t[a] * t[b]
    expected = s * expected
    got = collapse_to_k(u_pullback(7, plan), plan)
    return got == expected, f"collapse is {got}"


_WITNESSES = {
    "so11-odd-classes-survive": _witness_so11_odd_classes,
    "so8-u7-collapse-formula": _witness_so8_u7_formula,
}


# ---------------------------------------------------------------------------
# Levi root datum for g2


@dataclass(frozen=True)
class RootDatumMap:
    """Basis images of a rank-2 character lattice inside {(a,b,c): a+b+c=0}."""

    chi1: tuple[int, int, int] = (-1, 1, 0)
    chi2: tuple[int, int, int] = (1, 0, -1)
    long_root: tuple[int, int, int] = (-2, 1, 1)


def verify_g2_levi_root_datum(datum: RootDatumMap = RootDatumMap()) -> bool:
    """Check the map is a lattice isomorphism sending chi1 - chi2 to the root."""
    vectors = (datum.chi1, datum.chi2, datum.long_root)
    if any(sum(v) != 0 for v in vectors):
        return False
    # coordinates in the basis (1,-1,0), (0,1,-1) of the sum-zero lattice
    def coords(v):
        return (v[0], -v[2])
    (a1, b1), (a2, b2) = coords(datum.chi1), coords(datum.chi2)
    if abs(a1 * b2 - a2 * b1) != 1:
        return False
    diff = tuple(x - y for x, y in zip(datum.chi1, datum.chi2))
    return diff == datum.long_root


# ---------------------------------------------------------------------------
# pipeline


BIJECTION_DEGREE = 60
INVARIANT_HODGE_SCALE = 2


def run_scenario(name: str, max_degree: int = 40, prime: int = 2) -> Report:
    """Execute every check of one scenario and assemble its report."""
    scenario = get_scenario(name)
    if prime != 2:
        raise ContractError("catalog scenarios are defined in characteristic 2")
    if max_degree < 17:
        raise ContractError("max_degree below 17 would hide the ring relations")
    checks: list[Check] = []
    discovered: list[tuple[int, list]] = []

    for named in scenario.invariant_claims:
        rep = verify_invariant_presentation(named.claim, named.max_degree)
        detail = (f"generators of degrees {named.claim.generator_degrees()} "
                  f"verified through polynomial degree {named.max_degree}")
        if not rep.passed:
            detail = "; ".join(f"degree {d}: {msg}" for d, msg in rep.failures)
        ok = rep.passed
        if ok and named.companion is not None:
            base = named.claim.action
            same = all(
                len(invariant_basis(base, d)) == len(invariant_basis(named.companion, d))
                for d in range(named.max_degree + 1))
            ok = same
            detail += "; companion action gives identical dimensions" if same \
                else "; companion action DISAGREES"
        checks.append(check(f"invariants-{named.name}", ok, detail))

    for label, spec in scenario.split_bijections:
        bound = max(BIJECTION_DEGREE, max_degree)
        rep = verify_split_bijection(spec, bound)
        detail = (f"weights {spec.left.weights} vs {spec.right.weights} "
                  f"in {spec.multiplier} classes, all degrees 0..{bound}")
        if not rep.passed:
            detail = "; ".join(f"degree {n}: {msg}" for n, msg in rep.failures[:3])
        checks.append(check(f"bijection-{label}", rep.passed, detail))

    for disc in scenario.discoveries:
        kernel = discover_relation(list(disc.u_candidates), disc.plan)
        found = []
        for vec in kernel:
            rel = Polynomial.zero(scenario.candidate_ring.variables, GF2)
            for coeff, mono in zip(vec, disc.y_candidates):
                if coeff:
                    rel = rel + mono.scale(coeff)
            found.append(rel)
        expected = set(scenario.candidate_ring.relations)
        ok = set(found) == expected
        detail = "discovered " + (", ".join(str(r) for r in found) or "nothing")
        detail += "; matches candidate relations" if ok else "; MISMATCH"
        checks.append(check(f"discovery-{disc.name}", ok, detail))
        for rel in found:
            discovered.append((rel.homogeneous_degree(), rel.serialized()))

    for wname in scenario.witnesses:
        ok, detail = _WITNESSES[wname]()
        checks.append(check(wname, ok, detail))

    if scenario.model is not None:
        rule = einfty_table(scenario.model, max_degree, verify=False)
        oracle = einfty_oracle(scenario.model, max_degree)
        agree = rule == oracle
        checks.append(check(
            "einfty-rule-vs-oracle", agree,
            f"{len(rule.entries)} occupied cells through total degree {max_degree}"))
        odd = odd_antidiagonals(oracle)
        checks.append(check("einfty-even-concentration", not odd,
                            "no odd total degree survives" if not odd
                            else f"odd survivors at {odd}"))
        ab = abutment_check(scenario.model, scenario.abutment_ring, max_degree)
        detail = f"filtration totals match the abutment through degree {max_degree}"
        if not ab.passed:
            n, got, want = ab.failures[0]
            detail = f"degree {n}: model gives {got}, abutment needs {want}"
        checks.append(check("abutment", ab.passed, detail))
        cert = zeeman_certify(scenario.model, scenario.candidate_ring,
                              scenario.column_ring, scenario.abutment_ring,
                              max_degree)
        detail = (f"candidate table certified through degree {cert.certified_through}"
                  if cert.certified else
                  "; ".join(f"{name} fails at degree {d}" for name, d in cert.failures))
        checks.append(check("zeeman", cert.certified, detail))

    detail = scenario.degeneration_note
    for note in scenario.footnotes:
        detail += "; " + note
    checks.append(check("de-rham-table", scenario.hodge_degeneration_assumed, detail))

    tables = _scenario_tables(scenario, max_degree)
    return Report(scenario.name, prime, max_degree, tuple(checks), tables,
                  tuple(discovered))


def _scenario_tables(scenario: Scenario, max_degree: int) -> dict[str, list[int]]:
    def table(pres):
        return list(dimension_table(pres, max_degree).entries) if pres else []

    candidate = table(scenario.candidate_ring)
    return {
        "column": table(scenario.column_ring),
        "abutment": table(scenario.abutment_ring),
        "invariants": table(scenario.invariants_ring),
        "candidate": candidate,
        "singular": table(scenario.singular_ring),
        "de_rham": candidate if scenario.hodge_degeneration_assumed else [],
    }


def compare_dr_singular(name: str, max_degree: int = 40, prime: int = 2) -> Report:
    """Compare the de Rham table against the singular presentation."""
    scenario = get_scenario(name)
    if prime != 2:
        raise ContractError("catalog scenarios are defined in characteristic 2")
    dr = dimension_table(scenario.candidate_ring, max_degree)
    sing = dimension_table(scenario.singular_ring, max_degree)
    checks: list[Check] = []
    if scenario.comparison_mode == "equal":
        cmp = compare_tables(dr, sing, "equal")
        detail = f"equal at every degree 0..{max_degree}"
        if not cmp.passed:
            detail = f"first mismatch at degree {cmp.violations[0]}"
        checks.append(check("dr-equals-singular", cmp.passed, detail))
    else:
        cmp = compare_tables(dr, sing, "dominates")
        gaps = cmp.strict_degrees()
        detail = f"strict gaps {gaps}" if gaps else "tables equal"
        if not cmp.passed:
            detail = f"singular exceeds de Rham at degree {cmp.violations[0]}"
        checks.append(check("dr-dominates-singular", cmp.passed, detail))
        low = {d: g for d, g in gaps.items() if d < 33}
        expected_low = {32: 1} if max_degree >= 32 else {}
        checks.append(check(
            "unique-gap-below-33", low == expected_low,
            f"gaps below degree 33: {low}; expected {expected_low}"))
    tables = {
        "column": [], "abutment": [], "invariants": [],
        "candidate": list(dr.entries),
        "singular": list(sing.entries),
        "de_rham": list(dr.entries),
    }
    return Report(scenario.name, prime, max_degree, tuple(checks), tables)


__all__ = [
    "Scenario", "NamedClaim", "DiscoveryPlan", "UnknownScenarioError",
    "RootDatumMap", "verify_g2_levi_root_datum",
    "list_scenarios", "get_scenario", "run_scenario", "compare_dr_singular",
]
