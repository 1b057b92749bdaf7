"""The Hall module of symmetric forms over F1 and its split comodule structure."""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from fractions import Fraction

from f1hall.forms import (
    SymmetricForm,
    canonical_isometry_class,
    enumerate_forms,
    form_pieces,
    hyperbolic,
    isotropics,
    reduce,
    restrict_form,
    trivial_form,
)
from f1hall.hall import HallAlgebra
from f1hall.lincomb import LinComb, bilinear, linear_sum
from f1hall.quiverrep import (
    DimVector,
    Rep,
    canonical_form,
    dims_below,
    direct_sum_all,
    restrict,
)


class HallModule:
    """The Hall module of symmetric forms, a module and comodule over ``algebra``."""

    def __init__(self, algebra: HallAlgebra) -> None:
        self.algebra = algebra
        self.quiver = algebra.quiver
        self._iso: dict[SymmetricForm, Counter] = {}
        self._structure: dict[DimVector, dict] = {}
        self._coact: dict[SymmetricForm, LinComb] = {}

    # -- basis -------------------------------------------------------------

    def trivial(self) -> SymmetricForm:
        return trivial_form(self.quiver)

    def element(self, m: SymmetricForm) -> LinComb:
        return LinComb.basis(canonical_isometry_class(m))

    def forms(self, e: DimVector) -> tuple[SymmetricForm, ...]:
        return enumerate_forms(self.quiver, tuple(e))

    def symmetric_grades(self, bound: DimVector) -> list[DimVector]:
        return [e for e in dims_below(bound) if self.quiver.is_symmetric_dims(e)]

    def forms_below(self, bound: DimVector) -> list[SymmetricForm]:
        return [m for e in self.symmetric_grades(bound) for m in self.forms(e)]

    # -- action ------------------------------------------------------------

    def iso_table(self, n: SymmetricForm) -> Counter:
        """``(U, M) -> G^N_{U,M}`` for the canonical form ``n``."""
        n = canonical_isometry_class(n)
        table = self._iso.get(n)
        if table is None:
            table = Counter()
            for s in isotropics(n):
                u = canonical_form(restrict(n.rep, s))
                table[u, canonical_isometry_class(reduce(n, s))] += 1
            self._iso[n] = table
        return table

    def g_number(self, u: Rep, m: SymmetricForm, n: SymmetricForm) -> int:
        return self.iso_table(n)[canonical_form(u), canonical_isometry_class(m)]

    def structure(self, e: DimVector) -> dict:
        e = tuple(e)
        table = self._structure.get(e)
        if table is None:
            acc = defaultdict(list)
            for n in self.forms(e):
                for um, c in self.iso_table(n).items():
                    acc[um].append((n, c))
            table = self._structure[e] = dict(acc)
        return table

    def basis_act(self, u: Rep, m: SymmetricForm) -> LinComb:
        e = tuple(a + b for a, b in zip(self.quiver.hyperbolic_dims(u.dims), m.dims))
        return LinComb(self.structure(e).get((u, m), ()))

    def act(self, x: LinComb, xi: LinComb) -> LinComb:
        return bilinear(x, xi, self.basis_act)

    # -- coaction ------------------------------------------------------------

    def basis_coact(self, n: SymmetricForm) -> LinComb:
        """``ρ([N])``: one term ``[U] ⊗ [M]`` per class pair with ``H(U) ⊕ M ≅ N``."""
        n = canonical_isometry_class(n)
        out = self._coact.get(n)
        if out is not None:
            return out
        pieces = form_pieces(n)
        fixed = [p for p in pieces if not p.hyperbolic]
        groups: dict[Rep, list] = defaultdict(list)
        for p in pieces:
            if p.hyperbolic:
                groups[min(p.sides)].append(p)
        labels = sorted(groups)
        # per label: (number moved into H(U), how many of those use the label side)
        options = []
        for lab in labels:
            self_dual = self.algebra.dual_class(lab) == lab
            opts = []
            for k in range(len(groups[lab]) + 1):
                for a in ([k] if self_dual else range(k + 1)):
                    opts.append((k, a))
            options.append(opts)
        pairs = set()
        for choice in itertools.product(*options):
            u_parts, kept = [], [p.subset for p in fixed]
            for lab, (k, a) in zip(labels, choice):
                dual = self.algebra.dual_class(lab)
                u_parts += [lab] * a + [dual] * (k - a)
                kept += [p.subset for p in groups[lab][k:]]
            u = canonical_form(direct_sum_all(self.quiver, sorted(u_parts)))
            subset = tuple(
                tuple(sorted(x for s in kept for x in s[v])) for v in range(len(n.dims))
            )
            m = canonical_isometry_class(restrict_form(n, subset))
            pairs.add((u, m))
        out = self._coact[n] = LinComb((um, 1) for um in pairs)
        return out

    def coact(self, xi: LinComb) -> LinComb:
        return linear_sum(self.basis_coact(n) * c for n, c in xi.items())

    def is_coinvariant(self, xi: LinComb) -> bool:
        one = self.algebra.zero_class()
        return self.coact(xi) == xi.map_keys(lambda m: (one, m))

    def coinvariant_basis(self, bound: DimVector) -> list[SymmetricForm]:
        return [m for m in self.forms_below(bound) if not any(p.hyperbolic for p in form_pieces(m))]

    # -- twisted action on H ⊗ M ----------------------------------------------

    def star_p(self, t: LinComb, m: LinComb) -> LinComb:
        """``(U1⊗U2⊗U3) ⋆_P (U₋₁⊗N) = U1·U₋₁·P(U2) ⊗ U3 ⋆ N``, extended bilinearly."""
        alg = self.algebra

        def basis(triple: tuple, pair: tuple) -> LinComb:
            u1, u2, u3 = triple
            um1, n = pair
            left = alg.product(alg.basis_product(u1, um1), LinComb.basis(alg.dual_class(u2)))
            right = self.basis_act(u3, n)
            return bilinear(left, right, lambda a, b: LinComb.basis((a, b)))

        return bilinear(t, m, basis)

    def hopf_action(self, t: LinComb, m: LinComb) -> LinComb:
        """``(U1⊗U2) · (U₋₁⊗N) = U1·U₋₁ ⊗ U2 ⋆ N``: the Hopf-module compatibility side."""
        alg = self.algebra

        def basis(pair_h: tuple, pair_m: tuple) -> LinComb:
            left = alg.basis_product(pair_h[0], pair_m[0])
            right = self.basis_act(pair_h[1], pair_m[1])
            return bilinear(left, right, lambda a, b: LinComb.basis((a, b)))

        return bilinear(t, m, basis)

    def hyperbolic_element(self, u: Rep) -> LinComb:
        return LinComb.basis(canonical_isometry_class(hyperbolic(u)))


def coefficient_table(x: LinComb) -> list[tuple[str, Fraction]]:
    """Sorted ``(encoding, coefficient)`` rows; tuple keys are joined with ``⊗``."""

    def enc(k) -> str:
        if isinstance(k, tuple):
            return " ⊗ ".join(enc(p) for p in k)
        return k.encode()

    return [(enc(k), c) for k, c in x.sorted_items()]

