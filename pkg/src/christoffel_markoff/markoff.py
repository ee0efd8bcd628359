"""Markoff triples, Vieta flips, and the correspondence with Christoffel words.

A Markoff triple is a multiset {a, b, c} of positive integers with
a^2 + b^2 + c^2 = 3abc.  Triples are stored sorted ascending.  Each proper
Christoffel word w = w1 w2 gives the proper triple
{markoff_number(w1), markoff_number(w2), markoff_number(w)}, and every proper
triple arises from exactly one such word.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

from .errors import DomainError, InvariantViolation
from .matrices import markoff_number
from .words import FactoredWord, X, Y


class MarkoffTriple(NamedTuple):
    a: int
    b: int
    c: int

    @classmethod
    def of(cls, *values: int) -> "MarkoffTriple":
        """Build a triple from three positive integers in any order."""
        if len(values) != 3:
            raise DomainError(f"a Markoff triple has three entries, got {len(values)}")
        for v in values:
            if not isinstance(v, int) or isinstance(v, bool) or v <= 0:
                raise DomainError(f"entries must be positive integers, got {v!r}")
        t = cls(*sorted(values))
        if not check_equation(*t):
            raise DomainError(f"{t} is not a Markoff triple")
        return t

    def __str__(self) -> str:
        return f"({self.a}, {self.b}, {self.c})"


@dataclass(frozen=True)
class TripleProvenance:
    """A triple together with the factored word it came from."""

    triple: MarkoffTriple
    word: FactoredWord
    n1: int  # markoff_number(w1)
    n2: int  # markoff_number(w2)
    n: int  # markoff_number(w1 w2)

    @property
    def assignment(self) -> dict[str, int]:
        return {"w1": self.n1, "w2": self.n2, "w": self.n}

    def describe(self) -> str:
        fw = self.word
        return f"w1={fw.w1} -> {self.n1}, w2={fw.w2} -> {self.n2}, w={fw.word} -> {self.n}"


def check_equation(a: int, b: int, c: int) -> bool:
    return a * a + b * b + c * c == 3 * a * b * c


def is_proper(t: MarkoffTriple) -> bool:
    return t.a < t.b < t.c


def flip_max(t: MarkoffTriple) -> MarkoffTriple:
    """Replace the largest entry c by 3ab - c; the new maximum is b."""
    if not is_proper(t):
        raise DomainError(f"{t} is not proper; only proper triples descend")
    a, b, c = t
    return MarkoffTriple(*sorted((a, b, 3 * a * b - c)))


def neighbors(t: MarkoffTriple) -> tuple[MarkoffTriple, MarkoffTriple, MarkoffTriple]:
    """The three Vieta flips, replacing a, b, c in turn."""
    a, b, c = t
    return (
        MarkoffTriple(*sorted((3 * b * c - a, b, c))),
        MarkoffTriple(*sorted((a, 3 * a * c - b, c))),
        MarkoffTriple(*sorted((a, b, 3 * a * b - c))),
    )


def triple_of_word(fw: FactoredWord) -> TripleProvenance:
    n1, n2, n = markoff_number(fw.w1), markoff_number(fw.w2), markoff_number(fw.word)
    t = MarkoffTriple(*sorted((n1, n2, n)))
    if not check_equation(*t):
        raise InvariantViolation(f"{fw} gives {t}, which fails the Markoff equation")
    if not is_proper(t):
        raise InvariantViolation(f"{fw} gives the improper triple {t}")
    if t.c != n:
        raise InvariantViolation(f"{fw}: maximum of {t} does not come from the whole word")
    return TripleProvenance(t, fw, n1, n2, n)


_BASE = MarkoffTriple(1, 2, 5)


def word_of_triple(t: MarkoffTriple) -> FactoredWord:
    """Inverse of :func:`triple_of_word` on proper triples.

    Descend by :func:`flip_max` down to (1, 2, 5), which is the triple of
    ``x | y``, then lift back up.  At each lift the parent (a, b, c) flips to
    a triple realised by ``w1 | w2`` with b the number of ``w1 w2``; if a is
    the number of w1 the parent is ``w1 | w1 w2``, otherwise ``w1 w2 | w2``.
    """
    t = MarkoffTriple(*sorted(t))
    if min(t) <= 0 or not check_equation(*t):
        raise DomainError(f"{t} is not a Markoff triple")
    if not is_proper(t):
        raise DomainError(f"{t} is improper ({{1,1,1}} or {{1,1,2}}); it has no Christoffel word")

    chain = []
    while t != _BASE:
        chain.append(t)
        t = flip_max(t)
        if not is_proper(t):
            raise InvariantViolation(f"descent left the proper triples at {t} before reaching {_BASE}")

    w1, w2, n1, n2 = X, Y, 1, 2
    for a, b, _ in reversed(chain):
        if a == n1:
            w1, w2, n1, n2 = w1, w1 + w2, n1, b
        elif a == n2:
            w1, w2, n1, n2 = w1 + w2, w2, b, n2
        else:
            raise InvariantViolation(f"{a} matches neither factor of {w1} | {w2}")
    return FactoredWord(w1, w2)


def markoff_tree(bound: int) -> list[MarkoffTriple]:
    """Every Markoff triple with largest entry at most ``bound``.

    Breadth-first search from (1, 1, 1) through the Vieta flips, dropping any
    triple whose maximum exceeds the bound.  Sorted by (c, b, a).
    """
    if bound < 1:
        raise DomainError(f"bound must be at least 1, got {bound}")
    root = MarkoffTriple(1, 1, 1)
    seen = {root}
    queue = deque([root])
    while queue:
        for nxt in neighbors(queue.popleft()):
            if nxt.c <= bound and nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return sorted(seen, key=lambda t: (t.c, t.b, t.a))
