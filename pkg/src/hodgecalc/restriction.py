"""Restriction to elementary abelian subgroups and relation discovery.

The targets are rings k[t_1..t_i, s_1..s_j] with every t of degree 2
and every s of degree 1, cut down by optional flagged linear relations:
the s-sum relation (the Dickson-determinant constraint of the even
orthogonal subgroup construction) and the t-sum relation (the one-s
collapse stage).  Flags are realized by eliminating the last variable
of the flagged family, so values stay in a free polynomial ring.

Generator images: u_{2m} pulls back to the m-th elementary symmetric
polynomial in the t's, and u_{2m+1} to sum_j s_j * (sum of the m-fold
t-products whose index set contains j).  Collapsing sends every s_j to
the single s and applies the t-sum elimination.  Relations among
u-monomials are discovered as the kernel of the composite map on a
degree slice.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from . import ContractError
from .algebras import AlgebraPresentation, RingMap, free_presentation, relation_kernel
from .polynomials import (
    GF2, LinearElimination, Polynomial, VariableSet, variable_set,
)


@dataclass(frozen=True)
class ElementaryAbelianTarget:
    """k[t_1..t_i, s_1..s_j] modulo the flagged linear sum relations."""

    t_count: int
    s_count: int
    s_sum_relation: bool = False
    t_sum_relation: bool = False

    def __post_init__(self) -> None:
        if self.t_count < 0 or self.s_count < 0:
            raise ContractError("variable counts must be nonnegative")
        if self.s_sum_relation and self.s_count < 2:
            raise ContractError("s-sum relation needs at least two s variables")
        if self.t_sum_relation and self.t_count < 2:
            raise ContractError("t-sum relation needs at least two t variables")

    @functools.cached_property
    def variables(self) -> VariableSet:
        spec = [(f"t{k}", 2, (1, 1)) for k in range(1, self.t_count + 1)]
        spec += [(f"s{k}", 1, (1, 0)) for k in range(1, self.s_count + 1)]
        return variable_set(spec)

    @functools.cached_property
    def elimination(self) -> LinearElimination | None:
        subs: dict[str, Polynomial] = {}
        if self.s_sum_relation:
            rest = [f"s{k}" for k in range(1, self.s_count)]
            subs[f"s{self.s_count}"] = self._sum(rest)
        if self.t_sum_relation:
            rest = [f"t{k}" for k in range(1, self.t_count)]
            subs[f"t{self.t_count}"] = self._sum(rest)
        if not subs:
            return None
        return LinearElimination.make(self.variables, GF2, subs)

    def _sum(self, names: list[str]) -> Polynomial:
        out = Polynomial.zero(self.variables, GF2)
        for n in names:
            out = out + Polynomial.gen(self.variables, GF2, n)
        return out

    def reduce(self, p: Polynomial) -> Polynomial:
        return self.elimination.apply(p) if self.elimination else p

    @functools.cached_property
    def presentation(self) -> AlgebraPresentation:
        """Free presentation; values are kept in eliminated canonical form."""
        return free_presentation(self.variables, GF2)


@dataclass(frozen=True)
class RestrictionPlan:
    """Evaluation of the u-generators of SO(source_rank) at the SO(so_rank) stage.

    For the direct computations so_rank equals source_rank; a smaller
    so_rank composes with the restriction that kills u_i for i beyond
    it (the pullback formulas vanish there on their own).
    """

    so_rank: int
    source_rank: int | None = None

    def __post_init__(self) -> None:
        if self.so_rank < 3:
            raise ContractError("orthogonal rank too small")
        if self.source_rank is None:
            object.__setattr__(self, "source_rank", self.so_rank)
        if self.source_rank < self.so_rank:
            raise ContractError("source_rank must not be below so_rank")

    @property
    def r(self) -> int:
        return self.so_rank // 2

    @functools.cached_property
    def source(self) -> AlgebraPresentation:
        spec = [(f"u{i}", i) for i in range(2, self.source_rank + 1)]
        return free_presentation(variable_set(spec), GF2)

    @functools.cached_property
    def h_target(self) -> ElementaryAbelianTarget:
        return ElementaryAbelianTarget(
            t_count=self.r, s_count=self.r,
            s_sum_relation=(self.so_rank % 2 == 0))

    @functools.cached_property
    def k_target(self) -> ElementaryAbelianTarget:
        return ElementaryAbelianTarget(t_count=self.r, s_count=1,
                                       t_sum_relation=True)


def u_pullback(i: int, plan: RestrictionPlan) -> Polynomial:
    """Image of u_i in the big elementary abelian target, canonical form."""
    if not 2 <= i <= plan.source_rank:
        raise ContractError(f"u_{i} is not a generator of the source ring")
    tgt = plan.h_target
    vs = tgt.variables
    r = plan.r
    tnames = [f"t{k}" for k in range(1, r + 1)]
    coeffs: dict[tuple[int, ...], int] = {}
    if i % 2 == 0:
        m = i // 2
        for subset in itertools.combinations(range(r), m) if m <= r else ():
            mon = [0] * len(vs)
            for k in subset:
                mon[vs.index(tnames[k])] = 1
            coeffs[tuple(mon)] = 1
    else:
        m = (i - 1) // 2
        for j in range(r):
            s_idx = vs.index(f"s{j + 1}")
            for subset in itertools.combinations(range(r), m) if m <= r else ():
                if j not in subset:
                    continue
                mon = [0] * len(vs)
                mon[s_idx] = 1
                for k in subset:
                    mon[vs.index(tnames[k])] = 1
                key = tuple(mon)
                coeffs[key] = coeffs.get(key, 0) + 1
    return tgt.reduce(Polynomial.make(vs, GF2, coeffs))


def collapse_to_k(p: Polynomial, plan: RestrictionPlan) -> Polynomial:
    """Send every s_j to the single s, then reduce by the t-sum relation."""
    h, k = plan.h_target, plan.k_target
    if p.variables != h.variables:
        raise ContractError("polynomial is not over the plan's big target")
    images = {}
    for name in h.variables.names:
        target_name = "s1" if name.startswith("s") else name
        images[name] = Polynomial.gen(k.variables, GF2, target_name)
    return k.reduce(p.substitute(k.variables, images))


@functools.lru_cache(maxsize=None)
def restriction_map(plan: RestrictionPlan) -> RingMap:
    """The composite u-ring -> big target -> one-s target as a ring map."""
    images = {f"u{i}": collapse_to_k(u_pullback(i, plan), plan)
              for i in range(2, plan.source_rank + 1)}
    return RingMap.make(plan.source, plan.k_target.presentation, images)


def discover_relation(candidates: list[Polynomial],
                      plan: RestrictionPlan) -> list[tuple[int, ...]]:
    """Kernel of the restriction on a list of u-monomials, normalized."""
    return relation_kernel(candidates, restriction_map(plan))


__all__ = [
    "ElementaryAbelianTarget", "RestrictionPlan",
    "u_pullback", "collapse_to_k", "restriction_map", "discover_relation",
]
