"""Graded multivariate polynomials over a prime field.

A monomial is a tuple of exponents aligned with a :class:`VariableSet`;
its degree is the exponent-weighted sum of the declared variable
degrees.  A polynomial is an immutable map monomial -> nonzero scalar
in canonical form: coefficients reduced mod p, zero terms dropped,
terms sorted by (degree, exponent tuple).  That ordering is the graded
lexicographic order used throughout the package; "earliest" always
means smallest under it.

Linear quotients such as k[t1,t2,t3]/(t1+t2+t3) are handled by
:class:`LinearElimination`, a one-pass triangular substitution that
keeps all later computations inside a free polynomial ring.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field as dc_field

from . import ContractError, StructuralError

Monomial = tuple[int, ...]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True, slots=True)
class PrimeField:
    """The field F_p; scalars are canonical in [0, p)."""

    p: int = 2

    def __post_init__(self) -> None:
        if not _is_prime(self.p):
            raise StructuralError(f"characteristic {self.p} is not prime")

    def normalize(self, c: int) -> int:
        return c % self.p


GF2 = PrimeField(2)


@dataclass(frozen=True)
class VariableSet:
    """Ordered graded variables; order is fixed and canonical.

    ``bidegrees`` optionally records a (column, row) split of each
    variable's degree, used only as report metadata.
    """

    names: tuple[str, ...]
    degrees: tuple[int, ...]
    bidegrees: tuple[tuple[int, int] | None, ...] = dc_field(default=())

    def __post_init__(self) -> None:
        if len(set(self.names)) != len(self.names):
            raise StructuralError("variable names must be unique")
        if len(self.names) != len(self.degrees):
            raise StructuralError("names and degrees must align")
        if any(d < 1 for d in self.degrees):
            raise StructuralError("variable degrees must be positive")
        if not self.bidegrees:
            object.__setattr__(self, "bidegrees", (None,) * len(self.names))
        if len(self.bidegrees) != len(self.names):
            raise StructuralError("bidegrees must align with names")
        for deg, bi in zip(self.degrees, self.bidegrees):
            if bi is not None and bi[0] + bi[1] != deg:
                raise StructuralError(f"bidegree {bi} does not sum to degree {deg}")

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise StructuralError(f"unknown variable {name!r}") from None

    def monomial_degree(self, mon: Monomial) -> int:
        return sum(e * d for e, d in zip(mon, self.degrees))

    @property
    def unit(self) -> Monomial:
        return (0,) * len(self.names)

    def sort_key(self, mon: Monomial) -> tuple[int, Monomial]:
        return (self.monomial_degree(mon), mon)

    def monomials_of_degree(self, d: int) -> tuple[Monomial, ...]:
        """All monomials of weighted degree d, in ascending graded-lex order."""
        if d < 0:
            raise ContractError("degree must be nonnegative")
        return _monomials_of_degree(self.degrees, d)

    def format_monomial(self, mon: Monomial) -> str:
        parts = []
        for name, e in zip(self.names, mon):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


def variable_set(spec: list[tuple] | tuple[tuple, ...]) -> VariableSet:
    """Build a VariableSet from (name, degree) or (name, degree, bidegree) entries."""
    names = tuple(entry[0] for entry in spec)
    degrees = tuple(entry[1] for entry in spec)
    bidegrees = tuple(entry[2] if len(entry) > 2 else None for entry in spec)
    return VariableSet(names, degrees, bidegrees)


@functools.lru_cache(maxsize=None)
def _monomials_of_degree(weights: tuple[int, ...], d: int) -> tuple[Monomial, ...]:
    if not weights:
        return ((),) if d == 0 else ()
    if len(weights) == 1:
        q, r = divmod(d, weights[0])
        return ((q,),) if r == 0 else ()
    head, tail = weights[0], weights[1:]
    out = []
    for e in range(d // head + 1):
        for rest in _monomials_of_degree(tail, d - e * head):
            out.append((e,) + rest)
    return tuple(out)


def mon_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


@dataclass(frozen=True)
class Polynomial:
    """Canonical-form polynomial: sorted nonzero terms over a VariableSet."""

    variables: VariableSet
    field: PrimeField
    terms: tuple[tuple[Monomial, int], ...]

    @classmethod
    def make(cls, variables: VariableSet, field: PrimeField,
             coeffs: dict[Monomial, int]) -> Polynomial:
        cleaned = {}
        for mon, c in coeffs.items():
            c = field.normalize(c)
            if c:
                cleaned[mon] = c
        ordered = tuple(sorted(cleaned.items(), key=lambda t: variables.sort_key(t[0])))
        return cls(variables, field, ordered)

    @classmethod
    def zero(cls, variables: VariableSet, field: PrimeField) -> Polynomial:
        return cls(variables, field, ())

    @classmethod
    def one(cls, variables: VariableSet, field: PrimeField) -> Polynomial:
        return cls.make(variables, field, {variables.unit: 1})

    @classmethod
    def gen(cls, variables: VariableSet, field: PrimeField,
            name: str, power: int = 1) -> Polynomial:
        mon = [0] * len(variables)
        mon[variables.index(name)] = power
        return cls.make(variables, field, {tuple(mon): 1})

    def _check_compatible(self, other: Polynomial) -> None:
        if self.variables != other.variables or self.field != other.field:
            raise StructuralError("polynomials over different variable sets or fields")

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: Polynomial) -> Polynomial:
        self._check_compatible(other)
        acc = dict(self.terms)
        for mon, c in other.terms:
            acc[mon] = acc.get(mon, 0) + c
        return Polynomial.make(self.variables, self.field, acc)

    def __neg__(self) -> Polynomial:
        return Polynomial.make(self.variables, self.field,
                               {m: -c for m, c in self.terms})

    def __mul__(self, other: Polynomial) -> Polynomial:
        self._check_compatible(other)
        acc: dict[Monomial, int] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = mon_mul(m1, m2)
                acc[m] = acc.get(m, 0) + c1 * c2
        return Polynomial.make(self.variables, self.field, acc)

    def scale(self, c: int) -> Polynomial:
        return Polynomial.make(self.variables, self.field,
                               {m: c * k for m, k in self.terms})

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise ContractError("negative powers are not defined")
        out = Polynomial.one(self.variables, self.field)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    @property
    def degree(self) -> int | None:
        """Weighted degree of the largest term, or None for zero."""
        if not self.terms:
            return None
        return self.variables.monomial_degree(self.terms[-1][0])

    @property
    def is_homogeneous(self) -> bool:
        degs = {self.variables.monomial_degree(m) for m, _ in self.terms}
        return len(degs) <= 1

    def homogeneous_degree(self) -> int:
        if not self.terms:
            raise ContractError("zero polynomial has no homogeneous degree")
        degs = {self.variables.monomial_degree(m) for m, _ in self.terms}
        if len(degs) != 1:
            raise ContractError("polynomial is not homogeneous")
        return degs.pop()

    def uses_variable(self, idx: int) -> bool:
        return any(m[idx] for m, _ in self.terms)

    def substitute(self, target: VariableSet, images: dict[str, Polynomial]) -> Polynomial:
        """Map each variable to a polynomial over ``target`` and expand.

        Every variable with a nonzero exponent must be mapped.
        """
        out = Polynomial.zero(target, self.field)
        cache: dict[tuple[int, int], Polynomial] = {}
        for mon, c in self.terms:
            part = Polynomial.make(target, self.field, {target.unit: c})
            for idx, e in enumerate(mon):
                if e == 0:
                    continue
                name = self.variables.names[idx]
                if name not in images:
                    raise StructuralError(f"no image for variable {name!r}")
                key = (idx, e)
                if key not in cache:
                    cache[key] = images[name] ** e
                part = part * cache[key]
            out = out + part
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for mon, c in reversed(self.terms):
            body = self.variables.format_monomial(mon)
            if c == 1:
                pieces.append(body)
            elif body == "1":
                pieces.append(str(c))
            else:
                pieces.append(f"{c}*{body}")
        return " + ".join(pieces)

    def serialized(self) -> list[list]:
        """Stable JSON form: sorted list of [exponent-vector, coefficient]."""
        return [[list(mon), c] for mon, c in self.terms]


def _poly_sub(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + (-b)


Polynomial.__sub__ = _poly_sub  # type: ignore[assignment]


def elementary_symmetric(variables: VariableSet, field: PrimeField,
                         names: list[str], m: int) -> Polynomial:
    """The m-th elementary symmetric polynomial in the named variables."""
    if m == 0:
        return Polynomial.one(variables, field)
    idxs = [variables.index(n) for n in names]
    coeffs: dict[Monomial, int] = {}
    for subset in itertools.combinations(idxs, m):
        mon = [0] * len(variables)
        for i in subset:
            mon[i] = 1
        coeffs[tuple(mon)] = coeffs.get(tuple(mon), 0) + 1
    return Polynomial.make(variables, field, coeffs)


@dataclass(frozen=True)
class LinearElimination:
    """Triangular substitution eliminating variables by linear relations.

    Each eliminated variable maps to a homogeneous polynomial of the
    same degree in the remaining variables, so one pass already yields
    the canonical representative and applying it twice is a no-op.
    """

    variables: VariableSet
    field: PrimeField
    substitutions: tuple[tuple[int, Polynomial], ...]

    def __post_init__(self) -> None:
        elim = [idx for idx, _ in self.substitutions]
        if len(set(elim)) != len(elim):
            raise StructuralError("a variable can be eliminated only once")
        for idx, target in self.substitutions:
            if target.variables != self.variables or target.field != self.field:
                raise StructuralError("substitution target over a different ring")
            for other, _ in self.substitutions:
                if target.uses_variable(other):
                    raise StructuralError(
                        "cyclic substitution: target mentions an eliminated variable")
            if target and target.homogeneous_degree() != self.variables.degrees[idx]:
                raise StructuralError("substitution must preserve degree")

    @classmethod
    def make(cls, variables: VariableSet, field: PrimeField,
             subs: dict[str, Polynomial]) -> LinearElimination:
        pairs = tuple(sorted((variables.index(n), p) for n, p in subs.items()))
        return cls(variables, field, pairs)

    @property
    def eliminated(self) -> tuple[int, ...]:
        return tuple(idx for idx, _ in self.substitutions)

    def remaining_indices(self) -> tuple[int, ...]:
        gone = set(self.eliminated)
        return tuple(i for i in range(len(self.variables)) if i not in gone)

    def apply(self, p: Polynomial) -> Polynomial:
        if p.variables != self.variables or p.field != self.field:
            raise StructuralError("polynomial over a different ring")
        subs = dict(self.substitutions)
        out: dict[Monomial, int] = {}
        cache: dict[tuple[int, int], Polynomial] = {}
        for mon, c in p.terms:
            kept = list(mon)
            extra = None
            for idx in subs:
                e = mon[idx]
                if e == 0:
                    continue
                kept[idx] = 0
                key = (idx, e)
                if key not in cache:
                    cache[key] = subs[idx] ** e
                extra = cache[key] if extra is None else extra * cache[key]
            if extra is None:
                out[mon] = out.get(mon, 0) + c
            else:
                base = tuple(kept)
                for m2, c2 in extra.terms:
                    m = mon_mul(base, m2)
                    out[m] = out.get(m, 0) + c * c2
        return Polynomial.make(self.variables, self.field, out)


def eliminate(p: Polynomial, elim: LinearElimination) -> Polynomial:
    """Canonical representative of p in the linear quotient defined by elim."""
    return elim.apply(p)


__all__ = [
    "PrimeField", "GF2", "VariableSet", "variable_set", "Monomial", "mon_mul",
    "Polynomial", "elementary_symmetric", "LinearElimination", "eliminate",
]
