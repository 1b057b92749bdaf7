"""Quivers with contravariant involutions and their representations over F1.

A representation assigns a pointed set to every vertex and a partial
injection to every arrow.  Elements are addressed either locally, as
``(vertex, index)``, or globally, by their position in the concatenation of
all vertex sets in vertex order.

Canonical forms are computed component by component.  Inside a connected
representation every element has at most one neighbour along each arrow
direction, so the whole labelling is forced once a root element is chosen;
the canonical labelling is the lexicographically least over all roots.
Components are then sorted and concatenated.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

from f1hall import f1vect
from f1hall.f1vect import PartialInjection

DimVector = tuple[int, ...]
# per-vertex sorted tuples of element indices
Subset = tuple[tuple[int, ...], ...]


class Arrow(NamedTuple):
    name: str
    src: int
    tgt: int


@dataclass(frozen=True)
class Involution:
    vertex_map: tuple[int, ...]
    arrow_map: tuple[int, ...]

    @classmethod
    def identity(cls, n_vertices: int, n_arrows: int) -> Involution:
        return cls(tuple(range(n_vertices)), tuple(range(n_arrows)))


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...] = ()
    involution: Involution | None = None
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertex names must be unique")
        if len({a.name for a in self.arrows}) != len(self.arrows):
            raise ValueError("arrow names must be unique")
        n = len(self.vertices)
        for a in self.arrows:
            if not (0 <= a.src < n and 0 <= a.tgt < n):
                raise ValueError(f"arrow {a.name} has an invalid endpoint")
        object.__setattr__(self, "arrows", tuple(Arrow(*a) for a in self.arrows))

    @property
    def sigma(self) -> Involution:
        if self.involution is None:
            raise ValueError(f"quiver {self.name or self.vertices} has no involution")
        return self.involution

    def sigma_dims(self, d: DimVector) -> DimVector:
        """The dimension vector ``d ∘ σ`` (dimension vector of the dual)."""
        vm = self.sigma.vertex_map
        return tuple(d[vm[i]] for i in range(len(d)))

    def hyperbolic_dims(self, d: DimVector) -> DimVector:
        return add_dims(d, self.sigma_dims(d))

    def is_symmetric_dims(self, d: DimVector) -> bool:
        return tuple(d) == self.sigma_dims(d)

    def zero_dims(self) -> DimVector:
        return (0,) * len(self.vertices)

    def zero(self) -> Rep:
        return Rep(
            self,
            self.zero_dims(),
            tuple(PartialInjection(0, 0) for _ in self.arrows),
        )


def validate(quiver: Quiver, involution: Involution | None = None) -> list[str]:
    """Return the violated conditions of a contravariant involution (empty if ok)."""
    s = involution if involution is not None else quiver.involution
    if s is None:
        return ["no involution given"]
    nv, na = len(quiver.vertices), len(quiver.arrows)
    problems = []
    if sorted(s.vertex_map) != list(range(nv)):
        problems.append("vertex map is not a permutation of the vertices")
        return problems
    if sorted(s.arrow_map) != list(range(na)):
        problems.append("arrow map is not a permutation of the arrows")
        return problems
    for i in range(nv):
        if s.vertex_map[s.vertex_map[i]] != i:
            problems.append(f"vertex map is not an involution at {quiver.vertices[i]}")
    for k in range(na):
        if s.arrow_map[s.arrow_map[k]] != k:
            problems.append(f"arrow map is not an involution at {quiver.arrows[k].name}")
    for k, a in enumerate(quiver.arrows):
        b = quiver.arrows[s.arrow_map[k]]
        if (b.src, b.tgt) != (s.vertex_map[a.tgt], s.vertex_map[a.src]):
            problems.append(
                f"not contravariant: σ({a.name}) = {b.name} is "
                f"{quiver.vertices[b.src]}->{quiver.vertices[b.tgt]}, expected "
                f"{quiver.vertices[s.vertex_map[a.tgt]]}->{quiver.vertices[s.vertex_map[a.src]]}"
            )
    return problems


def add_dims(a: Sequence[int], b: Sequence[int]) -> DimVector:
    return tuple(x + y for x, y in zip(a, b))


def sub_dims(a: Sequence[int], b: Sequence[int]) -> DimVector:
    return tuple(x - y for x, y in zip(a, b))


def dims_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def dims_below(bound: Sequence[int]) -> list[DimVector]:
    """All dimension vectors ``d <= bound`` ordered by total dimension, then lexicographically."""
    box = itertools.product(*(range(b + 1) for b in bound))
    return sorted((tuple(d) for d in box), key=lambda d: (sum(d), d))


class Rep:
    """A representation of ``quiver`` over F1 (immutable)."""

    def __init__(
        self,
        quiver: Quiver,
        dims: Sequence[int],
        maps: Sequence[PartialInjection],
    ) -> None:
        dims = tuple(int(x) for x in dims)
        maps = tuple(maps)
        if len(dims) != len(quiver.vertices) or any(x < 0 for x in dims):
            raise ValueError(f"bad dimension vector {dims}")
        if len(maps) != len(quiver.arrows):
            raise ValueError("one map per arrow is required")
        for a, m in zip(quiver.arrows, maps):
            if (m.dom_size, m.cod_size) != (dims[a.src], dims[a.tgt]):
                raise ValueError(f"map for arrow {a.name} has the wrong sizes")
        self.quiver = quiver
        self.dims = dims
        self.maps = maps
        self.key = (dims, tuple(m.pairs for m in maps))
        self._hash = hash(self.key)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Rep) and self.key == other.key and self.quiver == other.quiver

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: Rep) -> bool:
        return self.key < other.key

    def __repr__(self) -> str:
        return f"Rep({self.encode()})"

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def element_list(self) -> list[tuple[int, int]]:
        return [(v, k) for v, n in enumerate(self.dims) for k in range(n)]

    def encode(self) -> str:
        parts = [",".join(map(str, self.dims))]
        for a, m in zip(self.quiver.arrows, self.maps):
            parts.append(f"{a.name}=" + ",".join(f"{s}>{t}" for s, t in m.pairs))
        return ";".join(parts)

    def edges(self) -> list[tuple[int, int, tuple[tuple[int, int], ...]]]:
        return [(a.src, a.tgt, m.pairs) for a, m in zip(self.quiver.arrows, self.maps)]


def dim_vector(r: Rep) -> DimVector:
    return r.dims


def direct_sum(r1: Rep, r2: Rep) -> Rep:
    if r1.quiver != r2.quiver:
        raise ValueError("direct sum of representations of different quivers")
    return Rep(
        r1.quiver,
        add_dims(r1.dims, r2.dims),
        tuple(f1vect.direct_sum(f, g) for f, g in zip(r1.maps, r2.maps)),
    )


def direct_sum_all(quiver: Quiver, reps: Sequence[Rep]) -> Rep:
    out = quiver.zero()
    for r in reps:
        out = direct_sum(out, r)
    return out


# ---------------------------------------------------------------------------
# element graphs shared with symmetric forms

Edges = Sequence[tuple[int, int, Sequence[tuple[int, int]]]]


def _neighbour_tables(
    dims: DimVector, edges: Edges
) -> tuple[list[int], list[list[int]], list[list[int]]]:
    """Per edge type, global out- and in-neighbour arrays (-1 for none)."""
    offsets = list(itertools.accumulate((0,) + tuple(dims[:-1]))) if dims else []
    n = sum(dims)
    outs, ins = [], []
    for src, tgt, pairs in edges:
        out = [-1] * n
        inn = [-1] * n
        for s, t in pairs:
            x, y = offsets[src] + s, offsets[tgt] + t
            out[x] = y
            inn[y] = x
        outs.append(out)
        ins.append(inn)
    return offsets, outs, ins


def _grade_of(dims: DimVector) -> list[int]:
    return [v for v, n in enumerate(dims) for _ in range(n)]


def components(dims: DimVector, edges: Edges) -> list[list[int]]:
    """Connected components of the element graph as sorted global id lists."""
    _, outs, ins = _neighbour_tables(dims, edges)
    n = sum(dims)
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        stack, comp = [start], []
        while stack:
            x = stack.pop()
            comp.append(x)
            for table in itertools.chain(outs, ins):
                y = table[x]
                if y >= 0 and not seen[y]:
                    seen[y] = True
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def canonical_relabeling(dims: DimVector, edges: Edges) -> tuple[tuple[int, ...], ...]:
    """Canonical per-vertex relabelling ``new[v][old]`` of a connected structure.

    Every edge type must be a partial injection, so a breadth-first traversal
    from a root visits elements in an order that is determined by the root
    alone.  The result minimises the relabelled edge lists over all roots in
    the first non-empty vertex.
    """
    offsets, outs, ins = _neighbour_tables(dims, edges)
    grade = _grade_of(dims)
    n = len(grade)
    if n == 0:
        return tuple(() for _ in dims)
    first = grade[0]
    best = None
    for root in range(offsets[first], offsets[first] + dims[first]):
        order = [root]
        new_global = [-1] * n
        new_global[root] = 0
        i = 0
        while i < len(order):
            x = order[i]
            i += 1
            for out, inn in zip(outs, ins):
                for y in (out[x], inn[x]):
                    if y >= 0 and new_global[y] < 0:
                        new_global[y] = len(order)
                        order.append(y)
        if len(order) != n:
            raise ValueError("canonical_relabeling requires a connected structure")
        counters = [0] * len(dims)
        local = [0] * n
        for x in order:
            v = grade[x]
            local[x] = counters[v]
            counters[v] += 1
        enc = tuple(
            tuple(sorted((local[offsets[src] + s], local[offsets[tgt] + t]) for s, t in pairs))
            for src, tgt, pairs in edges
        )
        if best is None or enc < best[0]:
            best = (enc, local)
    local = best[1]
    return tuple(
        tuple(local[offsets[v] + k] for k in range(dims[v])) for v in range(len(dims))
    )


def subset_from_globals(dims: DimVector, ids: Sequence[int]) -> Subset:
    offsets = list(itertools.accumulate((0,) + tuple(dims[:-1]))) if dims else []
    per = [[] for _ in dims]
    grade = _grade_of(dims)
    for x in sorted(ids):
        v = grade[x]
        per[v].append(x - offsets[v])
    return tuple(tuple(p) for p in per)


def subset_to_globals(dims: DimVector, s: Subset) -> list[int]:
    offsets = list(itertools.accumulate((0,) + tuple(dims[:-1]))) if dims else []
    return [offsets[v] + k for v, ks in enumerate(s) for k in ks]


def relabel_pairs(
    pairs: Sequence[tuple[int, int]], src_map: Sequence[int], tgt_map: Sequence[int]
) -> tuple[tuple[int, int], ...]:
    return tuple((src_map[s], tgt_map[t]) for s, t in pairs)


def relabel(r: Rep, perm: Sequence[Sequence[int]]) -> Rep:
    """Apply per-vertex relabelling ``perm[v][old] = new``."""
    q = r.quiver
    return Rep(
        q,
        r.dims,
        tuple(
            PartialInjection(m.dom_size, m.cod_size, relabel_pairs(m.pairs, perm[a.src], perm[a.tgt]))
            for a, m in zip(q.arrows, r.maps)
        ),
    )


def restrict(r: Rep, s: Subset) -> Rep:
    """The representation on the elements of ``s``, keeping arrow pairs inside ``s``.

    Indices are reassigned densely in increasing order.  For a
    subrepresentation this is the subobject; for the complement of one it is
    the quotient.
    """
    q = r.quiver
    index = [{old: new for new, old in enumerate(ks)} for ks in s]
    maps = []
    for a, m in zip(q.arrows, r.maps):
        src, tgt = index[a.src], index[a.tgt]
        maps.append(
            PartialInjection(
                len(src),
                len(tgt),
                tuple((src[x], tgt[y]) for x, y in m.pairs if x in src and y in tgt),
            )
        )
    return Rep(q, tuple(len(ks) for ks in s), tuple(maps))


def complement(dims: DimVector, s: Subset) -> Subset:
    return tuple(
        tuple(k for k in range(n) if k not in set(ks)) for n, ks in zip(dims, s)
    )


def full_subset(dims: DimVector) -> Subset:
    return tuple(tuple(range(n)) for n in dims)


def empty_subset(dims: DimVector) -> Subset:
    return tuple(() for _ in dims)


def subset_dims(s: Subset) -> DimVector:
    return tuple(len(ks) for ks in s)


# ---------------------------------------------------------------------------
# canonical forms and decomposition


def rep_components(r: Rep) -> list[Rep]:
    return [restrict(r, subset_from_globals(r.dims, c)) for c in components(r.dims, r.edges())]


def is_indecomposable(r: Rep) -> bool:
    return r.total_dim > 0 and len(components(r.dims, r.edges())) == 1


def _canonical_connected(r: Rep) -> Rep:
    return relabel(r, canonical_relabeling(r.dims, r.edges()))


@lru_cache(maxsize=None)
def indecomposables(r: Rep) -> tuple[Rep, ...]:
    """Canonical classes of the connected components, sorted (a multiset)."""
    return tuple(sorted(_canonical_connected(c) for c in rep_components(r)))


@lru_cache(maxsize=None)
def canonical_form(r: Rep) -> Rep:
    """The canonical representative of the isomorphism class of ``r``."""
    parts = indecomposables(r)
    if len(parts) == 1:
        return parts[0]
    return direct_sum_all(r.quiver, parts)


def is_isomorphic(r1: Rep, r2: Rep) -> bool:
    return canonical_form(r1) == canonical_form(r2)


def indecomposable_multiset(r: Rep) -> Counter:
    return Counter(indecomposables(r))


@lru_cache(maxsize=None)
def enumerate_reps(quiver: Quiver, d: DimVector) -> tuple[Rep, ...]:
    """One canonical representative per isomorphism class with dimension vector ``d``."""
    d = tuple(d)
    choices = [list(f1vect.partial_injections(d[a.src], d[a.tgt])) for a in quiver.arrows]
    seen = set()
    for maps in itertools.product(*choices):
        seen.add(canonical_form(Rep(quiver, d, maps)))
    return tuple(sorted(seen))


# ---------------------------------------------------------------------------
# subobjects


def successors(r: Rep) -> tuple[list[list[int]], list[list[int]]]:
    _, outs, ins = _neighbour_tables(r.dims, r.edges())
    n = r.total_dim
    succ = [[t[x] for t in outs if t[x] >= 0] for x in range(n)]
    pred = [[t[x] for t in ins if t[x] >= 0] for x in range(n)]
    return succ, pred


def closed_subsets(
    n: int,
    succ: Sequence[Sequence[int]],
    pred: Sequence[Sequence[int]],
    partner: Sequence[int] | None = None,
) -> Iterator[list[int]]:
    """Subsets of ``range(n)`` closed under ``succ``.

    If ``partner`` is given, ``x`` and ``partner[x]`` are never both chosen.
    Decisions propagate: choosing ``x`` forces its forward closure in and
    its partners out; rejecting ``x`` forces everything that reaches it out.
    """
    state = [0] * n  # 0 undecided, 1 in, -1 out

    def force(x: int, value: int, trail: list[int]) -> bool:
        stack = [(x, value)]
        while stack:
            y, val = stack.pop()
            if state[y] == val:
                continue
            if state[y] == -val:
                return False
            state[y] = val
            trail.append(y)
            if val == 1:
                stack.extend((z, 1) for z in succ[y])
                if partner is not None and partner[y] >= 0:
                    stack.append((partner[y], -1))
            else:
                stack.extend((z, -1) for z in pred[y])
        return True

    def rec(pos: int) -> Iterator[list[int]]:
        while pos < n and state[pos] != 0:
            pos += 1
        if pos == n:
            yield [x for x in range(n) if state[x] == 1]
            return
        for value in (-1, 1):
            trail: list[int] = []
            if force(pos, value, trail):
                yield from rec(pos + 1)
            for y in trail:
                state[y] = 0

    yield from rec(0)


def is_closed(r: Rep, s: Subset) -> bool:
    members = [set(ks) for ks in s]
    for a, m in zip(r.quiver.arrows, r.maps):
        for x, y in m.pairs:
            if x in members[a.src] and y not in members[a.tgt]:
                return False
    return True


def subrepresentations(r: Rep) -> list[Subset]:
    """All subrepresentations of ``r``, i.e. graded subsets closed under the arrow maps."""
    succ, pred = successors(r)
    return sorted(
        subset_from_globals(r.dims, ids) for ids in closed_subsets(r.total_dim, succ, pred)
    )


def subrep(r: Rep, s: Subset) -> Rep:
    if not is_closed(r, s):
        raise ValueError(f"{s} is not closed under the arrow maps")
    return restrict(r, s)


def quotient(r: Rep, s: Subset) -> Rep:
    """Collapse the subrepresentation ``s`` to the basepoint."""
    if not is_closed(r, s):
        raise ValueError(f"{s} is not closed under the arrow maps")
    return restrict(r, complement(r.dims, s))
