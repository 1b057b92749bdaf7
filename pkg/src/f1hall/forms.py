"""Duality, symmetric forms, isotropic subobjects and reduction over F1.

Pointed sets are identified with their duals, so the dual of a partial
injection is its converse and a symmetric form on ``N`` is a family of
bijections ``b[i]: N_i -> N_{σ(i)}`` with ``b[σ(i)] = b[i]^{-1}`` that
intertwines the arrow maps of ``N`` with those of its dual.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from f1hall import f1vect
from f1hall.f1vect import PartialInjection
from f1hall.quiverrep import (
    DimVector,
    Quiver,
    Rep,
    Subset,
    canonical_form,
    canonical_relabeling,
    closed_subsets,
    components,
    direct_sum,
    enumerate_reps,
    is_closed,
    relabel,
    restrict,
    subset_from_globals,
    successors,
)

# b[i][x] is the image in grade σ(i) of element x of grade i
FormMap = tuple[tuple[int, ...], ...]


def dualize(r: Rep) -> Rep:
    """The dual representation ``P(r)``: spaces permuted by σ, arrow maps conversed."""
    q = r.quiver
    s = q.sigma
    return Rep(
        q,
        q.sigma_dims(r.dims),
        tuple(f1vect.converse(r.maps[s.arrow_map[k]]) for k in range(len(q.arrows))),
    )


def is_form(rep: Rep, b: Sequence[Sequence[int]]) -> list[str]:
    """Violated conditions for ``b`` to be a symmetric form on ``rep`` (empty if ok)."""
    q = rep.quiver
    vm = q.sigma.vertex_map
    problems = []
    if len(b) != len(rep.dims):
        return ["need one bijection per vertex"]
    for i, bi in enumerate(b):
        if sorted(bi) != list(range(rep.dims[vm[i]])) or len(bi) != rep.dims[i]:
            problems.append(f"b at {q.vertices[i]} is not a bijection onto {q.vertices[vm[i]]}")
    if problems:
        return problems
    for i, bi in enumerate(b):
        if any(b[vm[i]][bi[x]] != x for x in range(len(bi))):
            problems.append(f"not symmetric: b at {q.vertices[vm[i]]} is not inverse to b at {q.vertices[i]}")
    for k, a in enumerate(q.arrows):
        dual_side = rep.maps[q.sigma.arrow_map[k]]
        lhs = f1vect.compose(
            _bij(b[a.src], rep.dims[a.src], rep.dims[vm[a.src]]), f1vect.converse(dual_side)
        )
        rhs = f1vect.compose(rep.maps[k], _bij(b[a.tgt], rep.dims[a.tgt], rep.dims[vm[a.tgt]]))
        if lhs != rhs:
            problems.append(f"b is not a morphism to the dual at arrow {a.name}")
    return problems


def _bij(p: Sequence[int], m: int, n: int) -> PartialInjection:
    return PartialInjection(m, n, tuple(enumerate(p)))


class SymmetricForm:
    """A representation with a symmetric form ``b`` (immutable, validated)."""

    def __init__(self, rep: Rep, b: FormMap | Sequence[Sequence[int]], *, check: bool = True) -> None:
        b = tuple(tuple(int(x) for x in bi) for bi in b)
        if check:
            problems = is_form(rep, b)
            if problems:
                raise ValueError("; ".join(problems))
        self.rep = rep
        self.b = b
        self.key = (rep.key, b)
        self._hash = hash(self.key)

    @property
    def quiver(self) -> Quiver:
        return self.rep.quiver

    @property
    def dims(self) -> DimVector:
        return self.rep.dims

    @property
    def total_dim(self) -> int:
        return self.rep.total_dim

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SymmetricForm)
            and self.key == other.key
            and self.rep.quiver == other.rep.quiver
        )

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: SymmetricForm) -> bool:
        return self.key < other.key

    def __repr__(self) -> str:
        return f"SymmetricForm({self.encode()})"

    def encode(self) -> str:
        return self.rep.encode() + ";b=" + "/".join(",".join(map(str, bi)) for bi in self.b)

    def edges(self) -> list:
        vm = self.quiver.sigma.vertex_map
        return self.rep.edges() + [
            (i, vm[i], tuple(enumerate(bi))) for i, bi in enumerate(self.b)
        ]


def trivial_form(quiver: Quiver) -> SymmetricForm:
    return SymmetricForm(quiver.zero(), tuple(() for _ in quiver.vertices))


def relabel_form(m: SymmetricForm, perm: Sequence[Sequence[int]]) -> SymmetricForm:
    """Transport ``m`` along the per-vertex relabelling ``perm[v][old] = new``."""
    vm = m.quiver.sigma.vertex_map
    b = []
    for i, bi in enumerate(m.b):
        new = [0] * len(bi)
        for x, y in enumerate(bi):
            new[perm[i][x]] = perm[vm[i]][y]
        b.append(tuple(new))
    return SymmetricForm(relabel(m.rep, perm), b, check=False)


def restrict_form(m: SymmetricForm, s: Subset) -> SymmetricForm:
    """Restriction to a ``b``-stable graded subset; indices reassigned in order."""
    vm = m.quiver.sigma.vertex_map
    index = [{old: new for new, old in enumerate(ks)} for ks in s]
    b = tuple(tuple(index[vm[i]][m.b[i][x]] for x in ks) for i, ks in enumerate(s))
    return SymmetricForm(restrict(m.rep, s), b)


def orthogonal_sum(m: SymmetricForm, n: SymmetricForm) -> SymmetricForm:
    vm = m.quiver.sigma.vertex_map
    b = tuple(
        m.b[i] + tuple(y + m.dims[vm[i]] for y in n.b[i]) for i in range(len(m.b))
    )
    return SymmetricForm(direct_sum(m.rep, n.rep), b)


def orthogonal_sum_all(quiver: Quiver, forms: Sequence[SymmetricForm]) -> SymmetricForm:
    out = trivial_form(quiver)
    for f in forms:
        out = orthogonal_sum(out, f)
    return out


def hyperbolic(u: Rep) -> SymmetricForm:
    """``H(u)``: the form on ``u ⊕ P(u)`` pairing each copy with the other."""
    q = u.quiver
    vm = q.sigma.vertex_map
    du = u.dims
    b = []
    for i in range(len(du)):
        j = vm[i]
        # u-copy of grade i -> dual copy in grade j (which is a copy of u_i)
        own = tuple(du[j] + x for x in range(du[i]))
        # dual copy in grade i is a copy of u_j -> u-copy of grade j
        dual = tuple(range(du[j]))
        b.append(own + dual)
    return SymmetricForm(direct_sum(u, dualize(u)), b)


# ---------------------------------------------------------------------------
# canonical isometry classes


def form_component_subsets(m: SymmetricForm) -> list[Subset]:
    """Connected components of the element graph with arrow and form edges."""
    return [subset_from_globals(m.dims, c) for c in components(m.dims, m.edges())]


def _canonical_connected_form(m: SymmetricForm) -> SymmetricForm:
    return relabel_form(m, canonical_relabeling(m.dims, m.edges()))


@lru_cache(maxsize=None)
def form_summands(m: SymmetricForm) -> tuple[SymmetricForm, ...]:
    """Canonical classes of the orthogonally indecomposable pieces, sorted."""
    return tuple(
        sorted(_canonical_connected_form(restrict_form(m, s)) for s in form_component_subsets(m))
    )


@lru_cache(maxsize=None)
def canonical_isometry_class(m: SymmetricForm) -> SymmetricForm:
    parts = form_summands(m)
    if len(parts) == 1:
        return parts[0]
    return orthogonal_sum_all(m.quiver, parts)


def isometric(m: SymmetricForm, n: SymmetricForm) -> bool:
    return canonical_isometry_class(m) == canonical_isometry_class(n)


@lru_cache(maxsize=None)
def enumerate_forms(quiver: Quiver, e: DimVector) -> tuple[SymmetricForm, ...]:
    """One canonical representative per isometry class with dimension vector ``e``.

    Empty unless ``e`` is σ-symmetric.
    """
    e = tuple(e)
    if not quiver.is_symmetric_dims(e):
        return ()
    vm = quiver.sigma.vertex_map
    slots = []  # (vertex, candidate bijections), one per σ-orbit
    for i in range(len(e)):
        if vm[i] == i:
            slots.append((i, list(f1vect.involutions(e[i]))))
        elif i < vm[i]:
            slots.append((i, list(itertools.permutations(range(e[i])))))
    seen = set()
    for r in enumerate_reps(quiver, e):
        for choice in itertools.product(*(c for _, c in slots)):
            b: list[tuple[int, ...]] = [()] * len(e)
            for (i, _), p in zip(slots, choice):
                b[i] = tuple(p)
                if vm[i] != i:
                    b[vm[i]] = f1vect.invert_permutation(tuple(p))
            if not is_form(r, b):
                seen.add(canonical_isometry_class(SymmetricForm(r, b, check=False)))
    return tuple(sorted(seen))


# ---------------------------------------------------------------------------
# isotropic subobjects and reduction


def form_image(m: SymmetricForm, u: Subset) -> Subset:
    """The graded image ``b(u)``: ``b[i](u_i)`` placed in grade ``σ(i)``."""
    vm = m.quiver.sigma.vertex_map
    out = [[] for _ in m.dims]
    for i, ks in enumerate(u):
        out[vm[i]].extend(m.b[i][x] for x in ks)
    return tuple(tuple(sorted(p)) for p in out)


def perp(m: SymmetricForm, u: Subset) -> Subset:
    """``u^⊥``: elements whose form image avoids ``u``."""
    vm = m.quiver.sigma.vertex_map
    members = [set(ks) for ks in u]
    return tuple(
        tuple(x for x in range(m.dims[i]) if m.b[i][x] not in members[vm[i]])
        for i in range(len(m.dims))
    )


def is_isotropic(m: SymmetricForm, u: Subset) -> bool:
    if not is_closed(m.rep, u):
        return False
    image = form_image(m, u)
    if any(set(a) & set(b) for a, b in zip(image, u)):
        return False
    p = perp(m, u)
    return is_closed(m.rep, p) and all(set(a) <= set(b) for a, b in zip(u, p))


def _partner(m: SymmetricForm) -> list[int]:
    vm = m.quiver.sigma.vertex_map
    offsets = list(itertools.accumulate((0,) + m.dims[:-1]))
    return [offsets[vm[i]] + m.b[i][x] for i in range(len(m.dims)) for x in range(m.dims[i])]


def isotropics(m: SymmetricForm) -> list[Subset]:
    """All isotropic subrepresentations of ``m``, sorted."""
    succ, pred = successors(m.rep)
    out = []
    for ids in closed_subsets(m.total_dim, succ, pred, _partner(m)):
        u = subset_from_globals(m.dims, ids)
        p = perp(m, u)
        if not is_closed(m.rep, p):
            raise AssertionError(f"orthogonal of {u} is not a subrepresentation")
        out.append(u)
    return sorted(out)


def reduce(m: SymmetricForm, u: Subset) -> SymmetricForm:
    """The reduction ``m // u``: the form induced on ``u^⊥ / u``."""
    if not is_isotropic(m, u):
        raise ValueError(f"{u} is not isotropic")
    p = perp(m, u)
    kept = tuple(tuple(x for x in ks if x not in set(us)) for ks, us in zip(p, u))
    out = restrict_form(m, kept)
    problems = is_form(out.rep, out.b)
    if problems:
        raise AssertionError("reduction is not a symmetric form: " + "; ".join(problems))
    return out


# ---------------------------------------------------------------------------
# orthogonal decomposition


@dataclass(frozen=True)
class FormPiece:
    """An orthogonally indecomposable piece of a form.

    ``sides`` holds the canonical class of the single underlying component
    for a self-dual piece, or of both swapped components for a hyperbolic one.
    """

    subset: Subset
    form: SymmetricForm
    sides: tuple[Rep, ...]

    @property
    def hyperbolic(self) -> bool:
        return len(self.sides) == 2


def form_pieces(m: SymmetricForm) -> list[FormPiece]:
    pieces = []
    for s in form_component_subsets(m):
        f = restrict_form(m, s)
        comps = components(f.dims, f.rep.edges())
        sides = tuple(
            canonical_form(restrict(f.rep, subset_from_globals(f.dims, c))) for c in comps
        )
        if len(sides) > 2:
            raise AssertionError("a form piece has more than two underlying components")
        pieces.append(FormPiece(s, f, sides))
    return pieces


def orthogonal_decompose(m: SymmetricForm) -> tuple[tuple[SymmetricForm, ...], tuple[Rep, ...]]:
    """Split ``m`` into self-dual summands and hyperbolic summands ``H(C)``.

    Returns the sorted canonical classes of the self-dual summands and, for
    each hyperbolic summand, the lesser of the classes of ``C`` and ``P(C)``.
    """
    self_dual, hyper = [], []
    for piece in form_pieces(m):
        if piece.hyperbolic:
            hyper.append(min(piece.sides))
        else:
            self_dual.append(canonical_isometry_class(piece.form))
    return tuple(sorted(self_dual)), tuple(sorted(hyper))


def has_hyperbolic_summand(m: SymmetricForm) -> bool:
    return any(p.hyperbolic for p in form_pieces(m))


def hyperbolic_label_counts(m: SymmetricForm) -> Counter:
    return Counter(orthogonal_decompose(m)[1])

