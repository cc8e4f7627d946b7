"""Finitely presented graded commutative algebras.

Dimensions of quotients are computed degree by degree, with no Groebner
machinery: enumerate all monomials of the degree, span the ideal's
slice there by the monomial multiples of the relations, row-reduce, and
keep the graded-lex-earliest monomials not hit by a pivot.  Pivoting
always prefers the largest monomial, so the surviving basis is the set
of standard monomials for that degree and is order-canonical.

Ring maps are generator substitutions validated to be degree-preserving
and well defined (every source relation must die in the target
quotient).  Kernels of candidate lists under a map are found by exact
linear algebra on the target's degree slice.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from . import ContractError, StructuralError
from .linalg import (
    gf2_left_kernel, gf2_reduce, gf2_rref,
    modp_reduce, modp_rref, modp_kernel,
)
from .polynomials import (
    Monomial, Polynomial, PrimeField, VariableSet, mon_mul,
)


@dataclass(frozen=True)
class AlgebraPresentation:
    """Generators with degrees plus homogeneous relations."""

    variables: VariableSet
    relations: tuple[Polynomial, ...]
    field: PrimeField

    def __post_init__(self) -> None:
        for r in self.relations:
            if r.variables != self.variables or r.field != self.field:
                raise StructuralError("relation over a different ring")
            if not r:
                raise StructuralError("relations must be nonzero")
            if not r.is_homogeneous:
                raise StructuralError("relations must be homogeneous")
            if r.homogeneous_degree() == 0:
                raise StructuralError("degree-0 relations are not allowed")

    @property
    def is_free(self) -> bool:
        return not self.relations

    def poly(self, coeffs: dict[Monomial, int]) -> Polynomial:
        return Polynomial.make(self.variables, self.field, coeffs)

    def gen(self, name: str, power: int = 1) -> Polynomial:
        return Polynomial.gen(self.variables, self.field, name, power)


def free_presentation(variables: VariableSet, field: PrimeField) -> AlgebraPresentation:
    return AlgebraPresentation(variables, (), field)


@dataclass(frozen=True)
class DimensionTable:
    """Explicit dimensions for every degree 0..max_degree."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.entries:
            raise StructuralError("a dimension table needs at least degree 0")
        if any(e < 0 for e in self.entries):
            raise StructuralError("dimensions are nonnegative")

    @property
    def max_degree(self) -> int:
        return len(self.entries) - 1

    def __getitem__(self, d: int) -> int:
        return self.entries[d]

    def __iter__(self):
        return iter(self.entries)


class _DegreeSlice:
    """Row-reduced span of the ideal inside one degree of the free ring.

    Matrix columns run over the degree's monomials with the graded-lex
    largest monomial first, so pivots remove the largest monomials and
    the earliest ones survive into the quotient basis.
    """

    def __init__(self, pres: AlgebraPresentation, d: int):
        self.monomials = pres.variables.monomials_of_degree(d)
        n = len(self.monomials)
        self.ncols = n
        self._col = {m: n - 1 - i for i, m in enumerate(self.monomials)}
        self.p = pres.field.p
        rows = []
        for rel in pres.relations:
            rd = rel.homogeneous_degree()
            if rd > d:
                continue
            for m in pres.variables.monomials_of_degree(d - rd):
                prod = {mon_mul(m, rm): c for rm, c in rel.terms}
                rows.append(self.vector(prod))
        if self.p == 2:
            self.rref, self.pivots = gf2_rref(rows, n)
        else:
            self.rref, self.pivots = modp_rref(rows, n, self.p)

    def vector(self, coeffs):
        """Coefficient map or polynomial terms -> matrix row."""
        items = coeffs.items() if isinstance(coeffs, dict) else coeffs
        if self.p == 2:
            v = 0
            for mon, c in items:
                if c % 2:
                    v ^= 1 << self._col[mon]
            return v
        row = [0] * self.ncols
        for mon, c in items:
            row[self._col[mon]] = (row[self._col[mon]] + c) % self.p
        return row

    def reduce(self, vec):
        if self.p == 2:
            return gf2_reduce(vec, self.rref, self.pivots)
        return modp_reduce(vec, self.rref, self.pivots, self.p)

    def is_zero_vec(self, vec) -> bool:
        red = self.reduce(vec)
        return red == 0 if self.p == 2 else not any(red)

    def quotient_monomials(self) -> list[Monomial]:
        pivot_cols = set(self.pivots)
        n = self.ncols
        return [m for i, m in enumerate(self.monomials) if (n - 1 - i) not in pivot_cols]


@functools.lru_cache(maxsize=None)
def _degree_slice(pres: AlgebraPresentation, d: int) -> _DegreeSlice:
    return _DegreeSlice(pres, d)


def graded_piece_basis(pres: AlgebraPresentation, d: int) -> list[Monomial]:
    """Monomial basis of the quotient's degree-d piece, earliest first."""
    if d < 0:
        raise ContractError("degree must be nonnegative")
    return _degree_slice(pres, d).quotient_monomials()


def dimension_table(pres: AlgebraPresentation, max_degree: int) -> DimensionTable:
    """Quotient dimensions for every degree 0..max_degree."""
    if max_degree < 0:
        raise ContractError("max_degree must be nonnegative")
    return DimensionTable(tuple(
        len(graded_piece_basis(pres, d)) for d in range(max_degree + 1)))


def is_zero_in_quotient(p: Polynomial, pres: AlgebraPresentation) -> bool:
    """True iff p lies in the ideal's slice of its degree."""
    if p.variables != pres.variables or p.field != pres.field:
        raise StructuralError("polynomial over a different ring")
    if not p:
        return True
    if not p.is_homogeneous:
        raise ContractError("quotient membership is defined degreewise")
    sl = _degree_slice(pres, p.homogeneous_degree())
    return sl.is_zero_vec(sl.vector(dict(p.terms)))


@dataclass(frozen=True)
class RingMap:
    """Degree-preserving generator substitution between presentations.

    Well-definedness is checked at construction: every source relation
    must map into the target ideal.
    """

    source: AlgebraPresentation
    target: AlgebraPresentation
    images: tuple[tuple[str, Polynomial], ...]

    @classmethod
    def make(cls, source: AlgebraPresentation, target: AlgebraPresentation,
             images: dict[str, Polynomial]) -> RingMap:
        ordered = tuple((name, images[name]) for name in source.variables.names
                        if name in images)
        if len(ordered) != len(source.variables.names):
            missing = [n for n in source.variables.names if n not in images]
            raise StructuralError(f"unmapped source generators: {missing}")
        return cls(source, target, ordered)

    def __post_init__(self) -> None:
        for name, img in self.images:
            if img.variables != self.target.variables or img.field != self.target.field:
                raise StructuralError("image over a different ring")
            d = self.source.variables.degrees[self.source.variables.index(name)]
            if img and (not img.is_homogeneous or img.homogeneous_degree() != d):
                raise StructuralError(f"image of {name!r} must be homogeneous of degree {d}")
        image_map = dict(self.images)
        for rel in self.source.relations:
            if not is_zero_in_quotient(rel.substitute(self.target.variables, image_map),
                                       self.target):
                raise StructuralError(
                    f"map is not well defined: relation {rel} survives in the target")

    def apply(self, p: Polynomial) -> Polynomial:
        if p.variables != self.source.variables or p.field != self.source.field:
            raise StructuralError("polynomial over a different ring")
        return p.substitute(self.target.variables, dict(self.images))


def apply_ring_map(f: RingMap, p: Polynomial) -> Polynomial:
    return f.apply(p)


def normalize_kernel_vector(vec: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Scale so the first nonzero coefficient is 1."""
    lead = next((c for c in vec if c), None)
    if lead is None or lead == 1:
        return vec
    inv = pow(lead, p - 2, p)
    return tuple((c * inv) % p for c in vec)


def relation_kernel(candidates: list[Polynomial], f: RingMap) -> list[tuple[int, ...]]:
    """Basis of the coefficient vectors killed by f in the target quotient.

    Candidates must be homogeneous of one common degree; the result is
    a reduced basis with each vector scaled to leading coefficient 1.
    """
    if not candidates:
        return []
    degrees = set()
    for c in candidates:
        if not c or not c.is_homogeneous:
            raise ContractError("candidates must be nonzero and homogeneous")
        degrees.add(c.homogeneous_degree())
    if len(degrees) != 1:
        raise ContractError("candidates must share one degree")
    sl = _degree_slice(f.target, degrees.pop())
    p = f.target.field.p
    reduced = [sl.reduce(sl.vector(dict(f.apply(c).terms))) for c in candidates]
    if p == 2:
        combos = gf2_left_kernel(reduced, sl.ncols)
        return [tuple((v >> i) & 1 for i in range(len(candidates))) for v in combos]
    combos = modp_kernel(list(map(list, zip(*reduced))), len(candidates), p)
    return [normalize_kernel_vector(v, p) for v in combos]


__all__ = [
    "AlgebraPresentation", "free_presentation", "DimensionTable",
    "graded_piece_basis", "dimension_table", "is_zero_in_quotient",
    "RingMap", "apply_ring_map", "relation_kernel", "normalize_kernel_vector",
]
