"""Exact 2x2 integer matrices, the word homomorphism ``mu`` and trace identities.

Entries are Python ints, so nothing overflows however deep the words get.
"""
from __future__ import annotations

from typing import NamedTuple

from .errors import DomainError, InvariantViolation
from .words import Word, X, Y


class Mat2(NamedTuple):
    e11: int
    e12: int
    e21: int
    e22: int

    def __matmul__(self, other: "Mat2") -> "Mat2":
        a, b, c, d = self
        e, f, g, h = other
        return Mat2(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    @property
    def det(self) -> int:
        return self.e11 * self.e22 - self.e12 * self.e21

    def rows(self) -> list[list[int]]:
        return [[self.e11, self.e12], [self.e21, self.e22]]

    def __str__(self) -> str:
        return f"[[{self.e11},{self.e12}],[{self.e21},{self.e22}]]"


IDENTITY = Mat2(1, 0, 0, 1)
MU_X = Mat2(2, 1, 1, 1)
MU_Y = Mat2(5, 2, 2, 1)
_GENERATORS = {X: MU_X, Y: MU_Y}


def mu(word: Word) -> Mat2:
    """Image of ``word`` under x -> [[2,1],[1,1]], y -> [[5,2],[2,1]]."""
    m = IDENTITY
    try:
        for letter in word:
            m = m @ _GENERATORS[letter]
    except KeyError as exc:
        raise DomainError(f"unexpected letter {exc.args[0]!r}") from None
    return m


def trace(m: Mat2) -> int:
    return m.e11 + m.e22


def inverse(m: Mat2) -> Mat2:
    """Exact inverse of a matrix with determinant +1 or -1 (adjugate over det)."""
    det = m.det
    if det not in (1, -1):
        raise DomainError(f"matrix {m} has determinant {det}; no integer inverse")
    return Mat2(det * m.e22, -det * m.e12, -det * m.e21, det * m.e11)


def commutator(a: Mat2, b: Mat2) -> Mat2:
    """a . b . a^-1 . b^-1"""
    return a @ b @ inverse(a) @ inverse(b)


def commutator_trace(a: Mat2, b: Mat2) -> int:
    return trace(commutator(a, b))


def fricke_residual(a: Mat2, b: Mat2) -> int:
    """Left minus right side of the Fricke identity; zero on SL2(Z).

    Tr(A)^2 + Tr(B)^2 + Tr(AB)^2 = Tr(ABA^-1B^-1) + 2 + Tr(A) Tr(B) Tr(AB)
    """
    ta, tb, tab = trace(a), trace(b), trace(a @ b)
    return ta * ta + tb * tb + tab * tab - (commutator_trace(a, b) + 2 + ta * tb * tab)


def power_trace_residuals(a: Mat2, b: Mat2) -> tuple[int, int]:
    """Residuals of Tr(A^2 B) + Tr(B) = Tr(A) Tr(AB) and Tr(AB^2) + Tr(A) = Tr(AB) Tr(B)."""
    ab = a @ b
    first = trace(a @ ab) + trace(b) - trace(a) * trace(ab)
    second = trace(ab @ b) + trace(a) - trace(ab) * trace(b)
    return first, second


def markoff_number_of_matrix(m: Mat2) -> int:
    """One third of the trace, checked against the upper-right entry."""
    t = trace(m)
    if t % 3:
        raise InvariantViolation(f"trace {t} of {m} is not divisible by 3")
    n = t // 3
    if n != m.e12:
        raise InvariantViolation(f"trace/3 = {n} differs from e12 = {m.e12} for {m}")
    return n


def markoff_number(word: Word) -> int:
    """Markoff number Tr(mu(word)) / 3 of a Christoffel word.

    >>> markoff_number("xxy")
    13
    """
    return markoff_number_of_matrix(mu(word))
