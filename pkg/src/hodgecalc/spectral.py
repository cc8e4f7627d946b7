"""Dimension-level first-quadrant multiplicative model spectral sequences.

A model is a tensor of three kinds of factors:

* a survivor factor: 0-column classes whose differentials all vanish;
* transgressive factors ``Delta(e) (x) k[y]`` with ``e`` at bidegree
  (0, m), ``y`` at (m+1, 0) and ``d_{m+1}(e y^i) = y^{i+1}``;
* a permanent-row factor: the ring of 0-row cycles.

An optional quotient twist divides the E2 page by the ideal generated
by one homogeneous relation among row variables (a transgression target
times a permanent generator, possibly a binomial); the quotient kills
the corresponding differentials and leaves an extra block standing at
E-infinity.

Everything is computed twice.  ``einfty_table`` evaluates the closed
rule (survivors tensor permanent row, plus the twist block) and, by
default, checks it entrywise against ``einfty_oracle``, which builds
the labeled monomial basis of the twisted E2 page and applies the
Leibniz differentials page by page with exact kernel/image bookkeeping
over F2.  Characteristic 2 keeps all signs trivial; the oracle refuses
anything else.
"""

from __future__ import annotations

import functools
from collections import Counter
from dataclasses import dataclass

from . import ContractError, StructuralError
from .algebras import AlgebraPresentation, DimensionTable, dimension_table
from .linalg import GF2Space, gf2_left_kernel, gf2_rref
from .polynomials import Polynomial, VariableSet


@dataclass(frozen=True)
class SurvivorFactor:
    """Graded basis of the surviving 0-column part."""

    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.degrees.count(0) != 1:
            raise StructuralError("survivor degrees must contain 0 exactly once")
        if any(d < 0 or d % 2 for d in self.degrees):
            raise StructuralError("survivor degrees must be nonnegative and even")

    def counts(self, max_degree: int) -> list[int]:
        c = Counter(self.degrees)
        return [c.get(d, 0) for d in range(max_degree + 1)]


@dataclass(frozen=True)
class TransgressiveFactor:
    """A class at (0, m) transgressing onto a fresh row generator."""

    class_degree: int
    target_name: str

    def __post_init__(self) -> None:
        if self.class_degree < 1:
            raise StructuralError("transgressive class degree must be positive")

    @property
    def target_degree(self) -> int:
        return self.class_degree + 1


@dataclass(frozen=True)
class QuotientTwist:
    """Ideal generator sum(target_k * g_k) dividing the E2 page.

    ``terms`` pairs a transgressive factor index with a permanent-row
    generator name; the first term must carry the transgression target
    of highest degree.  The surviving extra block at E-infinity is
    survivors (x) Delta(e_lead) (x) g_lead * row.
    """

    terms: tuple[tuple[int, str], ...]

    def __post_init__(self) -> None:
        if not self.terms:
            raise StructuralError("a twist needs at least one term")


@dataclass(frozen=True)
class ModelSpectralSequence:
    survivors: SurvivorFactor
    transgressives: tuple[TransgressiveFactor, ...]
    row: AlgebraPresentation
    twist: QuotientTwist | None = None

    def __post_init__(self) -> None:
        names = set(self.row.variables.names)
        for t in self.transgressives:
            if t.target_name in names:
                raise StructuralError(f"target {t.target_name!r} collides")
            names.add(t.target_name)
        if self.twist is not None:
            degs = []
            for idx, gname in self.twist.terms:
                if not 0 <= idx < len(self.transgressives):
                    raise StructuralError("twist references a missing factor")
                gdeg = self.row.variables.degrees[self.row.variables.index(gname)]
                degs.append(self.transgressives[idx].target_degree + gdeg)
            if len(set(degs)) != 1:
                raise StructuralError("twist generator must be homogeneous")
            lead = self.transgressives[self.twist.terms[0][0]].target_degree
            others = [self.transgressives[i].target_degree
                      for i, _ in self.twist.terms[1:]]
            if any(lead <= o for o in others):
                raise StructuralError("leading twist term must have the top target degree")

    @property
    def field(self):
        return self.row.field

    def twist_degree(self) -> int | None:
        if self.twist is None:
            return None
        idx, gname = self.twist.terms[0]
        gdeg = self.row.variables.degrees[self.row.variables.index(gname)]
        return self.transgressives[idx].target_degree + gdeg

    def row_ring(self) -> AlgebraPresentation:
        """Full 0-row ring: permanent generators, targets, twist relation."""
        base = self.row.variables
        names = base.names + tuple(t.target_name for t in self.transgressives)
        degrees = base.degrees + tuple(t.target_degree for t in self.transgressives)
        bidegrees = base.bidegrees + (None,) * len(self.transgressives)
        varset = VariableSet(names, degrees, bidegrees)
        relations = [_lift(r, varset) for r in self.row.relations]
        if self.twist is not None:
            gen = Polynomial.zero(varset, self.field)
            for idx, gname in self.twist.terms:
                target = Polynomial.gen(varset, self.field,
                                        self.transgressives[idx].target_name)
                g = Polynomial.gen(varset, self.field, gname)
                gen = gen + target * g
            relations.append(gen)
        return AlgebraPresentation(varset, tuple(relations), self.field)


def _lift(p: Polynomial, varset: VariableSet) -> Polynomial:
    pos = {n: varset.index(n) for n in p.variables.names}
    out = {}
    for mon, c in p.terms:
        new = [0] * len(varset)
        for i, e in enumerate(mon):
            new[pos[p.variables.names[i]]] = e
        out[tuple(new)] = c
    return Polynomial.make(varset, p.field, out)


class BigradedDimensionTable:
    """First-quadrant table of dimensions for total degree <= bound."""

    def __init__(self, bound: int, entries: dict[tuple[int, int], int]):
        self.bound = bound
        self.entries = {k: v for k, v in sorted(entries.items()) if v}

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def antidiagonal(self, n: int) -> int:
        return sum(v for (i, j), v in self.entries.items() if i + j == n)

    def items(self):
        return self.entries.items()

    def __eq__(self, other) -> bool:
        return (isinstance(other, BigradedDimensionTable)
                and self.bound == other.bound and self.entries == other.entries)

    def __repr__(self) -> str:
        return f"BigradedDimensionTable(bound={self.bound}, {len(self.entries)} cells)"


def _convolve(a: list[int], b: list[int], bound: int) -> list[int]:
    out = [0] * (bound + 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if i + j > bound:
                break
            out[i + j] += x * y
    return out


def column_table(model: ModelSpectralSequence, max_degree: int) -> DimensionTable:
    """Dimensions of the model's 0-column: survivors times Delta(e_k)."""
    col = model.survivors.counts(max_degree)
    for t in model.transgressives:
        delta = [0] * (max_degree + 1)
        delta[0] = 1
        if t.class_degree <= max_degree:
            delta[t.class_degree] = 1
        col = _convolve(col, delta, max_degree)
    return DimensionTable(tuple(col))


@functools.lru_cache(maxsize=None)
def e2_table(model: ModelSpectralSequence, bound: int) -> BigradedDimensionTable:
    """E2 page: 0-column dimensions tensor full 0-row dimensions."""
    if bound < 0:
        raise ContractError("bound must be nonnegative")
    col = column_table(model, bound)
    row = dimension_table(model.row_ring(), bound)
    entries = {}
    for i in range(bound + 1):
        if not row[i]:
            continue
        for j in range(bound + 1 - i):
            if col[j]:
                entries[(i, j)] = row[i] * col[j]
    return BigradedDimensionTable(bound, entries)


@functools.lru_cache(maxsize=None)
def einfty_table(model: ModelSpectralSequence, bound: int,
                 verify: bool = True) -> BigradedDimensionTable:
    """Closed-rule E-infinity table, checked against the page oracle.

    Rule: survivors tensor permanent row; a twist adds the block
    survivors (x) Delta(e_lead) (x) g_lead * row.  Disagreement with
    the oracle is an invariant breach and raises.
    """
    if bound < 0:
        raise ContractError("bound must be nonnegative")
    surv = model.survivors.counts(bound)
    row0 = dimension_table(model.row, bound)
    entries: dict[tuple[int, int], int] = {}
    for i in range(bound + 1):
        if not row0[i]:
            continue
        for j in range(bound + 1 - i):
            if surv[j]:
                entries[(i, j)] = entries.get((i, j), 0) + row0[i] * surv[j]
    if model.twist is not None:
        lead_idx, lead_g = model.twist.terms[0]
        jshift = model.transgressives[lead_idx].class_degree
        ishift = model.row.variables.degrees[model.row.variables.index(lead_g)]
        for i in range(ishift, bound + 1):
            if not row0[i - ishift]:
                continue
            for j in range(jshift, bound + 1 - i):
                if surv[j - jshift]:
                    entries[(i, j)] = (entries.get((i, j), 0)
                                       + row0[i - ishift] * surv[j - jshift])
    table = BigradedDimensionTable(bound, entries)
    if verify and table != einfty_oracle(model, bound):
        raise StructuralError(
            "E-infinity closed rule disagrees with the page-by-page oracle")
    return table


class _Labels:
    """Labeled monomial basis of the (possibly twisted) E2 page.

    A label is (survivor index, ((flag, power), ...) per transgressive
    factor, row monomial); its bidegree is
    col = sum power_k * (m_k + 1) + deg(row monomial),
    row = survivor degree + sum flag_k * m_k.
    """

    def __init__(self, model: ModelSpectralSequence, bound: int):
        if not model.row.is_free:
            raise ContractError("the page oracle needs a free permanent row")
        self.model = model
        self.bound = bound
        self.by_bidegree: dict[tuple[int, int], list] = {}
        self.index: dict[tuple, tuple[tuple[int, int], int]] = {}
        mdegs = [t.class_degree for t in model.transgressives]
        rowvars = model.row.variables
        sdegs = model.survivors.degrees
        combos = self._factor_combos(mdegs, bound)
        for s_idx, sdeg in enumerate(sdegs):
            for exps, (ccol, crow) in combos:
                base_col, base_row = ccol, sdeg + crow
                if base_col + base_row > bound:
                    continue
                for rdeg in range(bound + 1 - base_col - base_row):
                    for mon in rowvars.monomials_of_degree(rdeg):
                        label = (s_idx, exps, mon)
                        bideg = (base_col + rdeg, base_row)
                        slot = self.by_bidegree.setdefault(bideg, [])
                        self.index[label] = (bideg, len(slot))
                        slot.append(label)

    @staticmethod
    def _factor_combos(mdegs: list[int], bound: int):
        """All ((flag, power), ...) tuples with their (col, row) cost."""
        out = [((), (0, 0))]
        for m in mdegs:
            nxt = []
            for exps, (c, r) in out:
                for flag in (0, 1):
                    row = r + flag * m
                    if row + c > bound:
                        continue
                    power = 0
                    while True:
                        col = c + power * (m + 1)
                        if col + row > bound:
                            break
                        nxt.append((exps + ((flag, power),), (col, row)))
                        power += 1
            out = nxt
        return out

    def vector(self, terms) -> tuple[tuple[int, int], int]:
        """Sum of labels -> (bidegree, bitmask) in that bidegree's slice."""
        bideg = None
        v = 0
        for label in terms:
            b, pos = self.index[label]
            if bideg is None:
                bideg = b
            elif b != bideg:
                raise StructuralError("labels from different bidegrees")
            v ^= 1 << pos
        return bideg, v

    def multiply_by_twist_term(self, label, idx: int, gname: str):
        s_idx, exps, mon = label
        new_exps = tuple((f, p + 1) if k == idx else (f, p)
                         for k, (f, p) in enumerate(exps))
        gpos = self.model.row.variables.index(gname)
        new_mon = tuple(e + 1 if i == gpos else e for i, e in enumerate(mon))
        return (s_idx, new_exps, new_mon)

    def derivation(self, label, factor_idx: int):
        """Leibniz image of a label under e_k -> y_k, or None."""
        s_idx, exps, mon = label
        flag, power = exps[factor_idx]
        if not flag:
            return None
        new_exps = tuple((0, p + 1) if k == factor_idx else (f, p)
                         for k, (f, p) in enumerate(exps))
        return (s_idx, new_exps, mon)


@functools.lru_cache(maxsize=None)
def einfty_oracle(model: ModelSpectralSequence, bound: int) -> BigradedDimensionTable:
    """E-infinity by explicit page bookkeeping on the labeled E2 basis.

    Builds the ambient space one total degree past ``bound`` so that
    differentials leaving the reported range still shrink it, seeds the
    boundary spaces with the twist ideal, and for each transgression
    page computes kernels before adjoining the new boundaries.
    """
    if model.field.p != 2:
        raise ContractError("page bookkeeping is defined for characteristic 2 only")
    ambient = bound + 1
    labels = _Labels(model, ambient)
    cycles: dict[tuple[int, int], list[int]] = {}
    bounds: dict[tuple[int, int], GF2Space] = {}
    for bideg, slot in labels.by_bidegree.items():
        cycles[bideg] = [1 << k for k in range(len(slot))]
        bounds[bideg] = GF2Space()
    if model.twist is not None:
        gen_degree = model.twist_degree()
        for bideg, slot in labels.by_bidegree.items():
            src = (bideg[0] - gen_degree, bideg[1])
            for label in labels.by_bidegree.get(src, ()):
                terms = [labels.multiply_by_twist_term(label, idx, g)
                         for idx, g in model.twist.terms]
                tgt, v = labels.vector(terms)
                if tgt != bideg:
                    raise StructuralError("twist ideal slice misaligned")
                bounds[bideg].add(v)

    pages = sorted({t.target_degree for t in model.transgressives})
    for r in pages:
        active = [k for k, t in enumerate(model.transgressives)
                  if t.target_degree == r]
        new_boundaries: list[tuple[tuple[int, int], int]] = []
        new_cycles: dict[tuple[int, int], list[int]] = {}
        for bideg, zrows in cycles.items():
            tgt = (bideg[0] + r, bideg[1] - r + 1)
            if tgt not in cycles:
                new_cycles[bideg] = zrows
                continue
            slot = labels.by_bidegree[bideg]
            bspace = bounds[tgt]
            images = []
            for z in zrows:
                img_labels = []
                k = 0
                v = z
                while v:
                    if v & 1:
                        label = slot[k]
                        for f in active:
                            out = labels.derivation(label, f)
                            if out is not None:
                                img_labels.append(out)
                    v >>= 1
                    k += 1
                if img_labels:
                    _, iv = labels.vector(img_labels)
                else:
                    iv = 0
                images.append(bspace.reduce(iv))
            combos = gf2_left_kernel(images, len(labels.by_bidegree[tgt]))
            kept = []
            for combo in combos:
                acc = 0
                for i in range(len(zrows)):
                    if combo & (1 << i):
                        acc ^= zrows[i]
                kept.append(acc)
            new_cycles[bideg] = gf2_rref(kept, len(slot))[0]
            for iv in images:
                if iv:
                    new_boundaries.append((tgt, iv))
        cycles = new_cycles
        for tgt, iv in new_boundaries:
            bounds[tgt].add(iv)

    entries = {}
    for bideg, zrows in cycles.items():
        if bideg[0] + bideg[1] > bound:
            continue
        zred, _ = gf2_rref(zrows, len(labels.by_bidegree[bideg]))
        zspan = GF2Space(zred)
        b = bounds[bideg]
        if any(vec not in zspan for vec in b.basis()):
            raise StructuralError("boundaries escaped the cycle space")
        dim = len(zred) - b.rank
        if dim:
            entries[bideg] = dim
    return BigradedDimensionTable(bound, entries)


@dataclass(frozen=True)
class AbutmentReport:
    max_degree: int
    failures: tuple[tuple[int, int, int], ...]  # (degree, model sum, abutment dim)

    @property
    def passed(self) -> bool:
        return not self.failures


def abutment_check(model: ModelSpectralSequence, abutment: AlgebraPresentation,
                   max_degree: int) -> AbutmentReport:
    """Total E-infinity dimensions must match the abutment ring degreewise."""
    einf = einfty_table(model, max_degree)
    target = dimension_table(abutment, max_degree)
    failures = []
    for n in range(max_degree + 1):
        got = einf.antidiagonal(n)
        if got != target[n]:
            failures.append((n, got, target[n]))
    return AbutmentReport(max_degree, tuple(failures))


@dataclass(frozen=True)
class Certification:
    certified: bool
    certified_through: int
    failures: tuple[tuple[str, int], ...]  # (hypothesis, first failing degree)


def zeeman_certify(model: ModelSpectralSequence, candidate_row: AlgebraPresentation,
                   column: AlgebraPresentation, abutment: AlgebraPresentation,
                   max_degree: int) -> Certification:
    """Dimension-level comparison certificate for the 0-row ring.

    Verifies that the model's full 0-row matches the candidate, that the
    model's 0-column matches the column ring, and that the E-infinity
    totals account for the abutment; the tensor form of the E2 page
    holds by construction.  On success the candidate's dimension table
    is certified through max_degree - 1.
    """
    failures: list[tuple[str, int]] = []
    row_model = dimension_table(model.row_ring(), max_degree)
    row_cand = dimension_table(candidate_row, max_degree)
    for d in range(max_degree + 1):
        if row_model[d] != row_cand[d]:
            failures.append(("candidate-row", d))
            break
    col_model = column_table(model, max_degree)
    col_given = dimension_table(column, max_degree)
    for d in range(max_degree + 1):
        if col_model[d] != col_given[d]:
            failures.append(("column", d))
            break
    ab = abutment_check(model, abutment, max_degree)
    if not ab.passed:
        failures.append(("abutment", ab.failures[0][0]))
    certified = not failures
    return Certification(certified, max_degree - 1 if certified else -1,
                         tuple(failures))


def odd_antidiagonals(table: BigradedDimensionTable) -> list[int]:
    """Total degrees of odd parity carrying a nonzero entry."""
    bad = sorted({i + j for (i, j), v in table.items() if (i + j) % 2 and v})
    return bad


__all__ = [
    "SurvivorFactor", "TransgressiveFactor", "QuotientTwist",
    "ModelSpectralSequence", "BigradedDimensionTable",
    "column_table", "e2_table", "einfty_table", "einfty_oracle",
    "AbutmentReport", "abutment_check", "Certification", "zeeman_certify",
    "odd_antidiagonals",
]
