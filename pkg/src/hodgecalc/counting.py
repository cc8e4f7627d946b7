"""Weighted composition counting, split bijections, table comparison.

``count_solutions`` counts nonnegative integer solutions of
``sum w_i * x_i = n`` by dynamic programming over the weight list;
duplicate weights are distinct unknowns.  A split bijection sends a
solution over {u} + common to one over common + {m*u} by Euclid-dividing
the u-coordinate by m; verification both recounts and replays the map
on fully enumerated solution sets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import ContractError, StructuralError
from .algebras import DimensionTable


@dataclass(frozen=True)
class WeightSystem:
    """Positive integer weights; duplicates are separate generators."""

    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(w < 1 for w in self.weights):
            raise StructuralError("weights must be positive")


def count_solutions(ws: WeightSystem, n: int) -> int:
    """Number of ways to write n as a weighted sum over the system."""
    if n < 0:
        return 0
    ways = [0] * (n + 1)
    ways[0] = 1
    for w in ws.weights:
        for v in range(w, n + 1):
            ways[v] += ways[v - w]
    return ways[n]


def enumerate_solutions(ws: WeightSystem, n: int) -> list[tuple[int, ...]]:
    """All exponent tuples with the given weighted sum, lexicographically."""
    weights = ws.weights
    if not weights:
        return [()] if n == 0 else []
    head, tail = weights[0], WeightSystem(weights[1:])
    out = []
    for e in range(n // head + 1):
        for rest in enumerate_solutions(tail, n - e * head):
            out.append((e,) + rest)
    return out


@dataclass(frozen=True)
class SplitBijectionSpec:
    """Euclid-split of one weight-u coordinate into m residue classes.

    Left system: {u} + common.  Right system: common + {m*u}.  A left
    solution (a, rest) with a = m*q + i lands in component i as
    (rest, q), matching the degree drop n -> n - i*u.
    """

    split_weight: int
    multiplier: int
    common: WeightSystem

    def __post_init__(self) -> None:
        if self.split_weight < 1 or self.multiplier < 2:
            raise StructuralError("need u >= 1 and m >= 2")

    @property
    def left(self) -> WeightSystem:
        return WeightSystem((self.split_weight,) + self.common.weights)

    @property
    def right(self) -> WeightSystem:
        return WeightSystem(self.common.weights + (self.split_weight * self.multiplier,))

    def forward(self, sol: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
        """(a, rest) -> (component, (rest, a div m))."""
        a, rest = sol[0], sol[1:]
        i, q = a % self.multiplier, a // self.multiplier
        return i, rest + (q,)

    def backward(self, component: int, sol: tuple[int, ...]) -> tuple[int, ...]:
        rest, q = sol[:-1], sol[-1]
        return (self.multiplier * q + component,) + rest


@dataclass(frozen=True)
class BijectionReport:
    max_degree: int
    failures: tuple[tuple[int, str], ...]

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_split_bijection(spec: SplitBijectionSpec, max_degree: int) -> BijectionReport:
    """Check counts and the explicit map for every degree up to max_degree."""
    failures: list[tuple[int, str]] = []
    u, m = spec.split_weight, spec.multiplier
    for n in range(max_degree + 1):
        total = sum(count_solutions(spec.right, n - i * u) for i in range(m))
        if count_solutions(spec.left, n) != total:
            failures.append((n, "count mismatch"))
            continue
        left = enumerate_solutions(spec.left, n)
        targets = {i: set(enumerate_solutions(spec.right, n - i * u)) for i in range(m)}
        seen = {i: set() for i in range(m)}
        for sol in left:
            i, image = spec.forward(sol)
            if image not in targets[i]:
                failures.append((n, f"image of {sol} lands outside component {i}"))
                break
            if image in seen[i]:
                failures.append((n, f"map not injective at {sol}"))
                break
            if spec.backward(i, image) != sol:
                failures.append((n, f"roundtrip fails at {sol}"))
                break
            seen[i].add(image)
        else:
            if any(seen[i] != targets[i] for i in range(m)):
                failures.append((n, "map not surjective"))
    return BijectionReport(max_degree, tuple(failures))


@dataclass(frozen=True)
class TableComparison:
    mode: str
    max_degree: int
    violations: tuple[int, ...]
    strict: tuple[tuple[int, int], ...]

    @property
    def passed(self) -> bool:
        return not self.violations

    def strict_degrees(self) -> dict[int, int]:
        return dict(self.strict)


def compare_tables(a: DimensionTable, b: DimensionTable, mode: str) -> TableComparison:
    """Compare per degree; 'dominates' also collects strict gaps a > b."""
    if mode not in ("equal", "dominates"):
        raise ContractError(f"unknown comparison mode {mode!r}")
    if a.max_degree != b.max_degree:
        raise ContractError("tables cover different degree ranges")
    violations = []
    strict = []
    for d, (x, y) in enumerate(zip(a, b)):
        if mode == "equal":
            if x != y:
                violations.append(d)
        else:
            if x < y:
                violations.append(d)
            elif x > y:
                strict.append((d, x - y))
    return TableComparison(mode, a.max_degree, tuple(violations), tuple(strict))


def brute_force_count(ws: WeightSystem, n: int) -> int:
    """Independent box-enumeration count used as an oracle in tests."""
    ranges = [range(n // w + 1) for w in ws.weights]
    return sum(1 for combo in itertools.product(*ranges)
               if sum(e * w for e, w in zip(combo, ws.weights)) == n)


__all__ = [
    "WeightSystem", "count_solutions", "enumerate_solutions",
    "SplitBijectionSpec", "BijectionReport", "verify_split_bijection",
    "TableComparison", "compare_tables", "brute_force_count",
]
