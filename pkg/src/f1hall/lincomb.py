"""Finite linear combinations with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Hashable, Iterable, Iterator, Mapping


def sort_key(k: Any) -> Any:
    """Ordering key for basis labels: classes by their ``key``, tuples componentwise."""
    if isinstance(k, tuple):
        return tuple(sort_key(x) for x in k)
    return k.key


class LinComb(Mapping):
    """An immutable finitely supported map ``basis label -> Fraction``.

    Zero coefficients are never stored, so equality of two combinations is
    equality of their dictionaries.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Hashable, Any] | Iterable[tuple[Hashable, Any]] = ()) -> None:
        acc: dict[Hashable, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for k, c in items:
            acc[k] = acc.get(k, Fraction(0)) + Fraction(c)
        self._terms = {k: c for k, c in acc.items() if c != 0}

    @classmethod
    def basis(cls, k: Hashable) -> LinComb:
        return cls({k: 1})

    def __getitem__(self, k: Hashable) -> Fraction:
        return self._terms.get(k, Fraction(0))

    def __iter__(self) -> Iterator[Hashable]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __contains__(self, k: object) -> bool:
        return k in self._terms

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: LinComb) -> LinComb:
        return LinComb(list(self._terms.items()) + list(other._terms.items()))

    def __sub__(self, other: LinComb) -> LinComb:
        return self + (-other)

    def __neg__(self) -> LinComb:
        return LinComb({k: -c for k, c in self._terms.items()})

    def __mul__(self, scalar: Any) -> LinComb:
        return LinComb({k: c * scalar for k, c in self._terms.items()})

    __rmul__ = __mul__

    def sorted_items(self) -> list[tuple[Hashable, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: sort_key(kv[0]))

    def map_keys(self, f: Callable[[Hashable], Hashable]) -> LinComb:
        return LinComb((f(k), c) for k, c in self._terms.items())

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*{k!r}" for k, c in self.sorted_items())


def linear_sum(items: Iterable[LinComb]) -> LinComb:
    terms: list[tuple[Hashable, Fraction]] = []
    for x in items:
        terms.extend(x.items())
    return LinComb(terms)


def bilinear(x: LinComb, y: LinComb, f: Callable[[Hashable, Hashable], LinComb]) -> LinComb:
    """Extend ``f`` on basis labels bilinearly."""
    terms: list[tuple[Hashable, Fraction]] = []
    for a, ca in x.items():
        for b, cb in y.items():
            for k, c in f(a, b).items():
                terms.append((k, ca * cb * c))
    return LinComb(terms)


def exact_rank(rows: Iterable[Mapping[Hashable, Any]]) -> int:
    """Rank over Q of sparse row vectors by Gaussian elimination.

    Pivot columns are chosen as the least column label (by ``sort_key``) of
    each reduced row, so the elimination order is deterministic.
    """
    return len(row_reduce(rows))


def row_reduce(rows: Iterable[Mapping[Hashable, Any]]) -> dict[Hashable, dict[Hashable, Fraction]]:
    """Reduce ``rows`` to a basis of their span, keyed by pivot column."""
    pivots: dict[Hashable, dict[Hashable, Fraction]] = {}
    for row in rows:
        vec = {k: Fraction(c) for k, c in row.items() if c != 0}
        while vec:
            col = min(vec, key=sort_key)
            if col not in pivots:
                lead = vec[col]
                pivots[col] = {k: c / lead for k, c in vec.items()}
                break
            factor = vec[col]
            for k, c in pivots[col].items():
                v = vec.get(k, Fraction(0)) - factor * c
                if v:
                    vec[k] = v
                else:
                    vec.pop(k, None)
    return pivots


def in_span(vec: Mapping[Hashable, Any], pivots: dict[Hashable, dict[Hashable, Fraction]]) -> bool:
    v = {k: Fraction(c) for k, c in vec.items() if c != 0}
    while v:
        col = min(v, key=sort_key)
        if col not in pivots:
            return False
        factor = v[col]
        for k, c in pivots[col].items():
            x = v.get(k, Fraction(0)) - factor * c
            if x:
                v[k] = x
            else:
                v.pop(k, None)
    return True
