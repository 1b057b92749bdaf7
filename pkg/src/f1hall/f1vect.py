"""Finite pointed sets and their morphisms.

A pointed set of dimension ``n`` is represented by the integer ``n``; its
non-basepoint elements are ``0..n-1`` and the basepoint is never stored.
A morphism is a partial injection: every element not listed in ``pairs``
is sent to the basepoint.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterator


class Kind(enum.Enum):
    INFLATION = "inflation"
    DEFLATION = "deflation"
    ISOMORPHISM = "isomorphism"
    NEITHER = "neither"


@dataclass(frozen=True)
class PartialInjection:
    """A basepoint-preserving map injective away from the basepoint preimage.

    ``pairs`` is normalised to a tuple sorted by source index, so structural
    equality is semantic equality.
    """

    dom_size: int
    cod_size: int
    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.dom_size < 0 or self.cod_size < 0:
            raise ValueError("sizes must be non-negative")
        pairs = tuple(sorted((int(s), int(t)) for s, t in self.pairs))
        sources = [s for s, _ in pairs]
        targets = [t for _, t in pairs]
        if len(set(sources)) != len(sources):
            raise ValueError(f"not a function: repeated source in {pairs}")
        if len(set(targets)) != len(targets):
            raise ValueError(f"not injective: repeated target in {pairs}")
        for s, t in pairs:
            if not (0 <= s < self.dom_size and 0 <= t < self.cod_size):
                raise ValueError(
                    f"pair ({s}, {t}) out of bounds for {self.dom_size}->{self.cod_size}"
                )
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def identity(cls, n: int) -> PartialInjection:
        return cls(n, n, tuple((i, i) for i in range(n)))

    @classmethod
    def zero(cls, m: int, n: int) -> PartialInjection:
        return cls(m, n, ())

    @classmethod
    def from_permutation(cls, perm: tuple[int, ...] | list[int]) -> PartialInjection:
        return cls(len(perm), len(perm), tuple(enumerate(perm)))

    def __call__(self, x: int) -> int | None:
        """Image of ``x``, or ``None`` for the basepoint."""
        return self.as_dict().get(x)

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    @property
    def domain_support(self) -> frozenset[int]:
        return frozenset(s for s, _ in self.pairs)

    @property
    def image(self) -> frozenset[int]:
        return frozenset(t for _, t in self.pairs)

    @property
    def rank(self) -> int:
        return len(self.pairs)


def compose(f: PartialInjection, g: PartialInjection) -> PartialInjection:
    """Return ``g ∘ f`` (first ``f``, then ``g``)."""
    if f.cod_size != g.dom_size:
        raise ValueError(
            f"cannot compose {f.dom_size}->{f.cod_size} with {g.dom_size}->{g.cod_size}"
        )
    gd = g.as_dict()
    return PartialInjection(
        f.dom_size, g.cod_size, tuple((s, gd[t]) for s, t in f.pairs if t in gd)
    )


def converse(f: PartialInjection) -> PartialInjection:
    """Dual morphism under the identification of a pointed set with its dual."""
    return PartialInjection(f.cod_size, f.dom_size, tuple((t, s) for s, t in f.pairs))


def direct_sum(f: PartialInjection, g: PartialInjection) -> PartialInjection:
    shifted = tuple((s + f.dom_size, t + f.cod_size) for s, t in g.pairs)
    return PartialInjection(
        f.dom_size + g.dom_size, f.cod_size + g.cod_size, f.pairs + shifted
    )


def classify(f: PartialInjection) -> Kind:
    total = f.rank == f.dom_size
    onto = f.rank == f.cod_size
    if total and onto:
        return Kind.ISOMORPHISM
    if total:
        return Kind.INFLATION
    if onto:
        return Kind.DEFLATION
    return Kind.NEITHER


def partial_injections(m: int, n: int) -> Iterator[PartialInjection]:
    """All partial injections from an ``m``-set to an ``n``-set.

    There are ``sum_k C(m,k) C(n,k) k!`` of them.
    """
    for k in range(min(m, n) + 1):
        for sources in itertools.combinations(range(m), k):
            for targets in itertools.permutations(range(n), k):
                yield PartialInjection(m, n, tuple(zip(sources, targets)))


def involutions(n: int) -> Iterator[tuple[int, ...]]:
    """All permutations ``p`` of ``range(n)`` with ``p∘p = id``."""

    def extend(p: list[int | None]) -> Iterator[tuple[int, ...]]:
        try:
            i = p.index(None)
        except ValueError:
            yield tuple(p)  # type: ignore[arg-type]
            return
        p[i] = i
        yield from extend(p)
        for j in range(i + 1, n):
            if p[j] is None:
                p[i], p[j] = j, i
                yield from extend(p)
                p[j] = None
        p[i] = None

    yield from extend([None] * n)


def invert_permutation(p: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)
