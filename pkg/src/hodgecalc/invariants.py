"""Fixed subspaces of permutation actions on graded polynomial rings.

An action permutes the variables of a ring, possibly after a linear
elimination (so S_r can act on k[x_1..x_r]/(x_1+...+x_r) realized as a
free ring on x_1..x_{r-1}).  The fixed subspace of a degree is the
kernel of the stacked (g - id) matrices over the degree's monomials in
the remaining variables, computed exactly over F_p.

A presentation claim ("these invariants generate, freely") is verified
degree by degree: the claimed generators must be fixed, their products
must span the fixed subspace, and for a free claim the span dimension
must match the weighted composition count of the generator degrees.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import ContractError, StructuralError
from .counting import WeightSystem, count_solutions, enumerate_solutions
from .linalg import gf2_kernel, gf2_rank, modp_kernel, modp_rank
from .polynomials import LinearElimination, Monomial, Polynomial, PrimeField, VariableSet

Permutation = tuple[int, ...]


def permute_monomial(mon: Monomial, perm: Permutation) -> Monomial:
    out = [0] * len(mon)
    for i, e in enumerate(mon):
        out[perm[i]] = e
    return tuple(out)


@dataclass(frozen=True)
class PermutationAction:
    """Variable permutations acting on a ring, after optional elimination."""

    variables: VariableSet
    field: PrimeField
    generators: tuple[Permutation, ...]
    elimination: LinearElimination | None = None

    def __post_init__(self) -> None:
        n = len(self.variables)
        for g in self.generators:
            if sorted(g) != list(range(n)):
                raise StructuralError(f"{g} is not a permutation of the variables")
            for i, j in enumerate(g):
                if self.variables.degrees[i] != self.variables.degrees[j]:
                    raise StructuralError("permutations must preserve degrees")
        if self.elimination is not None:
            if (self.elimination.variables != self.variables
                    or self.elimination.field != self.field):
                raise StructuralError("elimination over a different ring")
            for idx, target in self.elimination.substitutions:
                relation = Polynomial.gen(self.variables, self.field,
                                          self.variables.names[idx]) - target
                for g in self.generators:
                    moved = self.apply_unreduced(relation, g)
                    if self.elimination.apply(moved):
                        raise StructuralError(
                            "elimination relation is not stable under the action")

    def apply_unreduced(self, p: Polynomial, perm: Permutation) -> Polynomial:
        return Polynomial.make(self.variables, self.field,
                               {permute_monomial(m, perm): c for m, c in p.terms})

    def apply(self, p: Polynomial, perm: Permutation) -> Polynomial:
        """Permute variables, then reduce to the canonical representative."""
        moved = self.apply_unreduced(p, perm)
        return self.elimination.apply(moved) if self.elimination else moved

    def reduce(self, p: Polynomial) -> Polynomial:
        return self.elimination.apply(p) if self.elimination else p

    def active_indices(self) -> tuple[int, ...]:
        if self.elimination is None:
            return tuple(range(len(self.variables)))
        return self.elimination.remaining_indices()

    def monomials(self, d: int) -> list[Monomial]:
        """Degree-d monomials in the remaining variables, earliest first."""
        active = self.active_indices()
        weights = tuple(self.variables.degrees[i] for i in active)
        out = []
        for packed in enumerate_solutions(WeightSystem(weights), d):
            mon = [0] * len(self.variables)
            for i, e in zip(active, packed):
                mon[i] = e
            out.append(tuple(mon))
        return out


def invariant_basis(action: PermutationAction, d: int) -> list[Polynomial]:
    """Canonical basis of the fixed subspace of the degree-d piece."""
    if d < 0:
        raise ContractError("degree must be nonnegative")
    mons = action.monomials(d)
    if not mons:
        return []
    index = {m: i for i, m in enumerate(mons)}
    p = action.field.p
    # Rows are indexed by (generator, output monomial) and columns by the
    # input monomial, so the right kernel is the intersection of the
    # fixed subspaces of all generators.
    rows = []
    for g in action.generators:
        if p == 2:
            block = [0] * len(mons)
        else:
            block = [[0] * len(mons) for _ in mons]
        for m in mons:
            j = index[m]
            mono = Polynomial.make(action.variables, action.field, {m: 1})
            diff = action.apply(mono, g) - mono
            for m2, c in diff.terms:
                if p == 2:
                    block[index[m2]] ^= 1 << j
                else:
                    block[index[m2]][j] = c
        rows.extend(block)
    if p == 2:
        vectors = [[(v >> i) & 1 for i in range(len(mons))]
                   for v in gf2_kernel(rows, len(mons))]
    else:
        vectors = [list(v) for v in modp_kernel(rows, len(mons), p)]
    return [Polynomial.make(action.variables, action.field,
                            {m: c for m, c in zip(mons, vec) if c})
            for vec in vectors]


def monomial_orbit_count(action: PermutationAction, d: int) -> int:
    """Number of monomial orbits in degree d; the action must not eliminate.

    This is the combinatorial oracle for the fixed-space dimension: the
    action permutes the monomial basis, so orbit sums form a basis of
    the invariants in every characteristic.
    """
    if action.elimination is not None:
        raise ContractError("orbit counting applies to plain permutation actions")
    remaining = set(action.monomials(d))
    orbits = 0
    while remaining:
        seed = remaining.pop()
        frontier = [seed]
        while frontier:
            m = frontier.pop()
            for g in action.generators:
                im = permute_monomial(m, g)
                if im in remaining:
                    remaining.remove(im)
                    frontier.append(im)
        orbits += 1
    return orbits


@dataclass(frozen=True)
class InvariantPresentationClaim:
    """Claimed generators of the invariant ring, optionally claimed free."""

    action: PermutationAction
    generators: tuple[Polynomial, ...]
    claimed_free: bool

    def __post_init__(self) -> None:
        for g in self.generators:
            if not g or not g.is_homogeneous:
                raise StructuralError("claimed generators must be nonzero homogeneous")

    def generator_degrees(self) -> tuple[int, ...]:
        return tuple(g.homogeneous_degree() for g in self.generators)


@dataclass(frozen=True)
class ClaimRow:
    degree: int
    fixed_dim: int
    span_dim: int
    expected_free: int | None


@dataclass(frozen=True)
class ClaimReport:
    max_degree: int
    rows: tuple[ClaimRow, ...]
    failures: tuple[tuple[int, str], ...]

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_invariant_presentation(claim: InvariantPresentationClaim,
                                  max_degree: int) -> ClaimReport:
    """Degreewise verification of an invariant-ring presentation claim."""
    action = claim.action
    p = action.field.p
    failures: list[tuple[int, str]] = []
    reduced = [action.reduce(g) for g in claim.generators]
    for g, red in zip(claim.generators, reduced):
        d = g.homogeneous_degree()
        if d > max_degree:
            continue
        for perm in action.generators:
            if action.apply(red, perm) != red:
                failures.append((d, f"claimed generator {g} is not invariant"))
                break
    degrees = claim.generator_degrees()
    powers: dict[tuple[int, int], Polynomial] = {}
    rows_out = []
    for d in range(max_degree + 1):
        mons = action.monomials(d)
        index = {m: i for i, m in enumerate(mons)}
        fixed_dim = len(invariant_basis(action, d))
        vectors = []
        for expo in enumerate_solutions(WeightSystem(degrees), d):
            prod = None
            for k, e in enumerate(expo):
                if e == 0:
                    continue
                key = (k, e)
                if key not in powers:
                    powers[key] = reduced[k] ** e
                prod = powers[key] if prod is None else prod * powers[key]
            if prod is None:
                prod = Polynomial.one(action.variables, action.field)
            if p == 2:
                v = 0
                for m, _ in prod.terms:
                    v ^= 1 << index[m]
                vectors.append(v)
            else:
                row = [0] * len(mons)
                for m, c in prod.terms:
                    row[index[m]] = c
                vectors.append(row)
        span_dim = (gf2_rank(vectors, len(mons)) if p == 2
                    else modp_rank(vectors, len(mons), p))
        if span_dim != fixed_dim:
            failures.append((d, f"products span {span_dim} of {fixed_dim} invariants"))
        expected = None
        if claim.claimed_free:
            expected = count_solutions(WeightSystem(degrees), d)
            if span_dim != expected:
                failures.append((d, f"free count {expected} != span dimension {span_dim}"))
        rows_out.append(ClaimRow(d, fixed_dim, span_dim, expected))
    return ClaimReport(max_degree, tuple(rows_out), tuple(failures))


__all__ = [
    "Permutation", "permute_monomial", "PermutationAction",
    "invariant_basis", "monomial_orbit_count",
    "InvariantPresentationClaim", "ClaimRow", "ClaimReport",
    "verify_invariant_presentation",
]
