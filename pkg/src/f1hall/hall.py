"""The Hall algebra of representations over F1 with its split coproduct.

Elements are ``LinComb``s keyed by canonical representations; tensors are
``LinComb``s keyed by tuples of them.  Structure constants are computed from
the target side: for every class ``W`` of a grade, all subrepresentations of
one representative are tallied by (class of sub, class of quotient).
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from f1hall.forms import dualize
from f1hall.lincomb import LinComb, bilinear, exact_rank, linear_sum, row_reduce
from f1hall.quiverrep import (
    DimVector,
    Quiver,
    Rep,
    add_dims,
    canonical_form,
    dims_below,
    dims_leq,
    direct_sum_all,
    enumerate_reps,
    indecomposables,
    is_indecomposable,
    quotient,
    restrict,
    sub_dims,
    subrepresentations,
)


@dataclass(frozen=True)
class GradeReport:
    grade: DimVector
    classes: int
    monomials: int
    rank: int

    @property
    def ok(self) -> bool:
        return self.classes == self.rank


def multiset_splits(counts: Sequence[int], parts: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All ways to split a multiplicity vector into ``parts`` ordered pieces."""

    def split_one(m: int) -> list[tuple[int, ...]]:
        return [c for c in itertools.product(range(m + 1), repeat=parts) if sum(c) == m]

    for choice in itertools.product(*(split_one(m) for m in counts)):
        yield tuple(tuple(c[p] for c in choice) for p in range(parts))


class HallAlgebra:
    """The Hall algebra of ``Rep_F1(quiver)`` with its duality involution."""

    def __init__(self, quiver: Quiver) -> None:
        self.quiver = quiver
        self._splits: dict[Rep, Counter] = {}
        self._structure: dict[DimVector, dict[tuple[Rep, Rep], list[tuple[Rep, int]]]] = {}
        self._dual: dict[Rep, Rep] = {}

    # -- basis -----------------------------------------------------------

    def zero_class(self) -> Rep:
        return self.quiver.zero()

    def unit(self) -> LinComb:
        return LinComb.basis(self.zero_class())

    def element(self, r: Rep) -> LinComb:
        return LinComb.basis(canonical_form(r))

    def classes(self, d: DimVector) -> tuple[Rep, ...]:
        return enumerate_reps(self.quiver, tuple(d))

    def classes_below(self, bound: DimVector) -> list[Rep]:
        return [w for d in dims_below(bound) for w in self.classes(d)]

    # -- structure constants ---------------------------------------------

    def split_table(self, w: Rep) -> Counter:
        """``(U, V) -> F^W_{U,V}`` for the canonical class ``w``."""
        w = canonical_form(w)
        table = self._splits.get(w)
        if table is None:
            table = Counter()
            for s in subrepresentations(w):
                table[canonical_form(restrict(w, s)), canonical_form(quotient(w, s))] += 1
            self._splits[w] = table
        return table

    def hall_number(self, u: Rep, v: Rep, w: Rep) -> int:
        if add_dims(u.dims, v.dims) != w.dims:
            return 0
        return self.split_table(w)[canonical_form(u), canonical_form(v)]

    def structure(self, d: DimVector) -> dict[tuple[Rep, Rep], list[tuple[Rep, int]]]:
        d = tuple(d)
        table = self._structure.get(d)
        if table is None:
            table = defaultdict(list)
            for w in self.classes(d):
                for uv, c in sorted(self.split_table(w).items(), key=lambda kv: (kv[0][0].key, kv[0][1].key)):
                    table[uv].append((w, c))
            self._structure[d] = dict(table)
        return table

    def basis_product(self, u: Rep, v: Rep) -> LinComb:
        d = add_dims(u.dims, v.dims)
        return LinComb(self.structure(d).get((u, v), ()))

    def product(self, x: LinComb, y: LinComb) -> LinComb:
        return bilinear(x, y, self.basis_product)

    def bracket(self, x: LinComb, y: LinComb) -> LinComb:
        return self.product(x, y) - self.product(y, x)

    # -- coalgebra ---------------------------------------------------------

    def _split_basis(self, w: Rep, parts: int) -> LinComb:
        counts = Counter(indecomposables(w))
        kinds = sorted(counts)
        terms = []
        for pieces in multiset_splits([counts[k] for k in kinds], parts):
            key = tuple(
                canonical_form(
                    direct_sum_all(self.quiver, [k for k, a in zip(kinds, piece) for _ in range(a)])
                )
                for piece in pieces
            )
            terms.append((key, 1))
        return LinComb(terms)

    def coproduct(self, x: LinComb) -> LinComb:
        """``Δ``: sum over all splittings ``U ⊕ V ≅ W`` of ``[U] ⊗ [V]``."""
        return linear_sum(self._split_basis(w, 2) * c for w, c in x.items())

    def coproduct2(self, x: LinComb) -> LinComb:
        """``Δ² = (Δ ⊗ id) ∘ Δ`` as a sum over three-way splittings."""
        return linear_sum(self._split_basis(w, 3) * c for w, c in x.items())

    def counit(self, x: LinComb) -> Fraction:
        return x[self.zero_class()]

    def tensor_product(self, s: LinComb, t: LinComb) -> LinComb:
        """Componentwise product on ``H ⊗ H`` (or any tensor power)."""

        def basis(a: tuple, b: tuple) -> LinComb:
            out = LinComb.basis(())
            for x, y in zip(a, b):
                p = self.basis_product(x, y)
                out = bilinear(out, p, lambda k, w: LinComb.basis(k + (w,)))
            return out

        return bilinear(s, t, basis)

    def tensor_map(self, t: LinComb, slot: int, f) -> LinComb:
        """Apply a linear map ``f: basis -> LinComb`` to one tensor slot."""
        terms = []
        for key, c in t.items():
            for k, d in f(key[slot]).items():
                new = key[:slot] + (k if isinstance(k, tuple) else (k,)) + key[slot + 1 :]
                terms.append((new, c * d))
        return LinComb(terms)

    # -- duality -----------------------------------------------------------

    def dual_class(self, u: Rep) -> Rep:
        out = self._dual.get(u)
        if out is None:
            out = canonical_form(dualize(u))
            self._dual[u] = out
        return out

    def p_involution(self, x: LinComb) -> LinComb:
        return x.map_keys(self.dual_class)

    # -- primitives ----------------------------------------------------------

    def primitive_basis(self, bound: DimVector) -> list[Rep]:
        return [w for w in self.classes_below(bound) if is_indecomposable(w)]

    def is_primitive(self, x: LinComb) -> bool:
        one = self.zero_class()
        expected = linear_sum(
            [x.map_keys(lambda k: (k, one)), x.map_keys(lambda k: (one, k))]
        )
        return self.coproduct(x) == expected

    def split_pm(self, bound: DimVector) -> tuple[list[LinComb], list[LinComb]]:
        """Bases of the ``P``-invariant and ``P``-anti-invariant primitives."""
        plus, minus = [], []
        for j in self.primitive_basis(bound):
            pj = self.dual_class(j)
            if pj == j:
                plus.append(LinComb.basis(j))
            elif j < pj:
                plus.append(LinComb({j: 1, pj: 1}))
                minus.append(LinComb({j: 1, pj: -1}))
        return plus, minus

    def monomials(self, d: DimVector, prims: Sequence[Rep]) -> list[tuple[Rep, ...]]:
        """All ordered sequences of primitive classes with total grade ``d``."""
        d = tuple(d)
        if not any(d):
            return [()]
        out = []
        for j in prims:
            if j.total_dim and dims_leq(j.dims, d):
                out.extend((j,) + rest for rest in self.monomials(sub_dims(d, j.dims), prims))
        return out

    def mm_graded_report(self, bound: DimVector) -> list[GradeReport]:
        """Per grade: number of classes vs rank of ordered products of indecomposables."""
        prims = self.primitive_basis(bound)
        cache: dict[tuple[Rep, ...], LinComb] = {(): self.unit()}

        def value(seq: tuple[Rep, ...]) -> LinComb:
            if seq not in cache:
                cache[seq] = self.product(value(seq[:-1]), LinComb.basis(seq[-1]))
            return cache[seq]

        reports = []
        for d in dims_below(bound):
            seqs = self.monomials(d, prims)
            rank = exact_rank(value(s) for s in seqs)
            reports.append(GradeReport(d, len(self.classes(d)), len(seqs), rank))
        return reports

    def lower_central_series(self, bound: DimVector, max_terms: int = 16) -> list[dict[DimVector, int]]:
        """Graded dimensions of ``g_1 = V^prim`` and ``g_{k+1} = [g_1, g_k]`` up to ``bound``."""
        prims = [LinComb.basis(j) for j in self.primitive_basis(bound)]

        def grade(x: LinComb) -> DimVector:
            return next(iter(x)).dims

        series = []
        current = prims
        for _ in range(max_terms):
            by_grade: dict[DimVector, list[LinComb]] = defaultdict(list)
            for x in current:
                by_grade[grade(x)].append(x)
            dims = {}
            basis = []
            for g in sorted(by_grade, key=lambda d: (sum(d), d)):
                pivots = row_reduce(by_grade[g])
                if pivots:
                    dims[g] = len(pivots)
                    basis.extend(LinComb(v) for v in pivots.values())
            if not dims:
                break
            series.append(dims)
            nxt = []
            for x in prims:
                for y in basis:
                    if dims_leq(add_dims(grade(x), grade(y)), bound):
                        z = self.bracket(x, y)
                        if z:
                            nxt.append(z)
            current = nxt
        return series
