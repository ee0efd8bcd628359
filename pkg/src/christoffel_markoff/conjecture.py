"""Bounded checks around the injectivity of w -> Tr(mu(w)) / 3.

Nobody knows whether two different Christoffel words can share a Markoff
number.  :func:`injectivity_scan` looks for such a collision among the words
of a finite piece of the Christoffel tree, and :func:`cross_check` confirms
that triple maxima and word numbers agree as sets below a bound.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import DomainError
from .markoff import is_proper, markoff_tree
from .matrices import MU_X, MU_Y, Mat2, markoff_number_of_matrix, mu
from .words import X, Y, Word, christoffel_tree


@dataclass(frozen=True)
class CollisionReport:
    bound: int
    depth: int
    words_checked: int
    numbers: tuple[int, ...] = field(repr=False)
    collisions: tuple[tuple[int, tuple[Word, ...]], ...]

    @property
    def distinct_numbers(self) -> int:
        return len(set(self.numbers))

    @property
    def injective(self) -> bool:
        return not self.collisions

    def to_dict(self) -> dict:
        # big integers go out as decimal strings
        return {
            "bound": str(self.bound),
            "depth": self.depth,
            "words_checked": self.words_checked,
            "distinct_numbers": self.distinct_numbers,
            "collisions": [
                {"number": str(n), "words": list(ws)} for n, ws in self.collisions
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def scan_words(depth: int) -> list[Word]:
    """x, y, then every whole word of the Christoffel tree down to ``depth``."""
    return [X, Y] + [fw.word for fw in christoffel_tree(depth)]


def injectivity_scan(depth: int) -> CollisionReport:
    if depth < 0:
        raise DomainError(f"depth must be non-negative, got {depth}")
    words = scan_words(depth)
    by_number: dict[int, list[Word]] = {}
    numbers = []
    for w in words:
        # also asserts trace/3 == e12
        n = markoff_number_of_matrix(mu(w))
        numbers.append(n)
        by_number.setdefault(n, []).append(w)
    collisions = tuple(
        (n, tuple(ws)) for n, ws in sorted(by_number.items()) if len(ws) > 1
    )
    return CollisionReport(
        bound=max(numbers),
        depth=depth,
        words_checked=len(words),
        numbers=tuple(numbers),
        collisions=collisions,
    )


def christoffel_numbers_up_to(bound: int) -> set[int]:
    """Markoff numbers of proper Christoffel words that do not exceed ``bound``.

    Walks the Christoffel tree on matrices.  Both extension rules multiply the
    whole word's matrix by a positive matrix, so every entry grows and a
    branch can be cut as soon as its number passes the bound.
    """
    found: set[int] = set()
    stack = [(MU_X, MU_Y)]
    while stack:
        u, v = stack.pop()
        uv: Mat2 = u @ v
        n = markoff_number_of_matrix(uv)
        if n > bound:
            continue
        found.add(n)
        stack.append((u, uv))
        stack.append((uv, v))
    return found


def triple_maxima_up_to(bound: int) -> set[int]:
    return {t.c for t in markoff_tree(bound) if is_proper(t)}


def cross_check(bound: int) -> bool:
    """Do proper-triple maxima and Christoffel-word numbers agree up to ``bound``?"""
    if bound < 1:
        raise DomainError(f"bound must be at least 1, got {bound}")
    return triple_maxima_up_to(bound) == christoffel_numbers_up_to(bound)
