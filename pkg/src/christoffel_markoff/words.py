"""Christoffel words over the alphabet {x, y}.

Words are plain Python strings of the letters ``x`` and ``y``.  The lower
Christoffel word of slope q/p codes the lattice path from (0, 0) to (p, q)
that stays below the segment joining those points and leaves no lattice
point strictly between itself and the segment.
"""
from __future__ import annotations

from math import gcd
from typing import Iterator, NamedTuple, Optional

from .errors import DomainError

X = "x"
Y = "y"
ALPHABET = frozenset(X + Y)

Word = str
LatticePath = list[tuple[int, int]]


class Slope(NamedTuple):
    """Endpoint (p, q) of a lattice path: p horizontal and q vertical steps."""

    p: int
    q: int

    def __str__(self) -> str:
        return f"{self.q}/{self.p}"


class FactoredWord(NamedTuple):
    """A proper Christoffel word split as its standard factorization."""

    w1: Word
    w2: Word

    @property
    def word(self) -> Word:
        return self.w1 + self.w2

    def __str__(self) -> str:
        return f"{self.w1} | {self.w2}"


def as_word(text: str) -> Word:
    """Validate ``text`` as a word over {x, y} and return it."""
    if not isinstance(text, str):
        raise DomainError(f"word must be a string, got {type(text).__name__}")
    bad = set(text) - ALPHABET
    if bad:
        raise DomainError(f"word contains letters outside {{x, y}}: {''.join(sorted(bad))!r}")
    return text


def check_slope(p: int, q: int) -> Slope:
    if p < 0 or q < 0:
        raise DomainError(f"p and q must be non-negative, got ({p}, {q})")
    if (p, q) == (0, 0):
        raise DomainError("p and q must not both be zero")
    if gcd(p, q) != 1:
        raise DomainError(f"p and q must be coprime, got ({p}, {q})")
    return Slope(p, q)


def christoffel_word(p: int, q: int) -> Word:
    """Lower Christoffel word with ``p`` letters x and ``q`` letters y.

    >>> christoffel_word(7, 3)
    'xxxyxxyxxy'
    """
    check_slope(p, q)
    if q == 0:
        return X
    if p == 0:
        return Y
    n = p + q
    # letter i is x exactly when i*q mod n does not wrap around
    return "".join(
        X if (i * q) % n > ((i - 1) * q) % n else Y for i in range(1, n + 1)
    )


def lattice_path(word: Word) -> LatticePath:
    a = b = 0
    path = [(0, 0)]
    for letter in word:
        if letter == X:
            a += 1
        elif letter == Y:
            b += 1
        else:
            raise DomainError(f"unexpected letter {letter!r}")
        path.append((a, b))
    return path


def path_below_segment(path: LatticePath) -> bool:
    """True if every point of ``path`` is weakly below the chord to its end."""
    p, q = path[-1]
    return all(q * a - p * b >= 0 for a, b in path)


def path_interior_points(path: LatticePath) -> list[tuple[int, int]]:
    """Lattice points strictly between a monotone path and its chord.

    For each abscissa the path covers a vertical run; any lattice point above
    that run and strictly below the chord lies inside the enclosed polygon.
    """
    p, q = path[-1]
    top: dict[int, int] = {}
    for a, b in path:
        top[a] = max(b, top.get(a, b))
    inside = []
    for a, hi in sorted(top.items()):
        b = hi + 1
        while q * a - p * b > 0:
            inside.append((a, b))
            b += 1
    return inside


def is_christoffel(word: Word) -> Optional[Slope]:
    """Return the slope of ``word`` if it is a Christoffel word, else None."""
    p, q = word.count(X), word.count(Y)
    if p + q != len(word) or (p, q) == (0, 0) or gcd(p, q) != 1:
        return None
    if christoffel_word(p, q) != word:
        return None
    return Slope(p, q)


def is_proper(word: Word) -> bool:
    return X in word and Y in word


def _require_proper(word: Word) -> Slope:
    slope = is_christoffel(word)
    if slope is None:
        raise DomainError(f"{word!r} is not a Christoffel word")
    if not is_proper(word):
        raise DomainError(f"{word!r} is not a proper Christoffel word and has no standard factorization")
    return slope


def cut_point(word: Word) -> tuple[int, int]:
    """Interior path point of a proper Christoffel word closest to the chord.

    The distance of (a, b) to the chord is proportional to q*a - p*b, and by
    coprimality exactly one interior point attains the value 1.
    """
    p, q = _require_proper(word)
    hits = [(a, b) for a, b in lattice_path(word)[1:-1] if q * a - p * b == 1]
    if len(hits) != 1:
        raise DomainError(f"{word!r} has {len(hits)} candidate cut points")
    return hits[0]


def standard_factorization(word: Word) -> FactoredWord:
    """Split a proper Christoffel word at its lattice point closest to the chord.

    >>> standard_factorization("xxxyxxyxxy")
    FactoredWord(w1='xxxyxxy', w2='xxy')
    """
    a, b = cut_point(word)
    k = a + b
    return FactoredWord(word[:k], word[k:])


def _walk_tree(max_depth: int) -> Iterator[tuple[int, FactoredWord]]:
    stack = [(0, FactoredWord(X, Y))]
    while stack:
        depth, (u, v) = stack.pop()
        yield depth, FactoredWord(u, v)
        if depth < max_depth:
            # pushed in reverse so the (u, uv) branch is visited first
            stack.append((depth + 1, FactoredWord(u + v, v)))
            stack.append((depth + 1, FactoredWord(u, u + v)))


def christoffel_tree(max_depth: int) -> list[FactoredWord]:
    """All factorization pairs within ``max_depth`` steps of (x, y).

    Depth-first pre-order, expanding ``(u, v) -> (u, uv)`` before
    ``(u, v) -> (uv, v)``.  Depth ``d`` contributes ``2**d`` pairs.
    """
    if max_depth < 0:
        raise DomainError(f"max_depth must be non-negative, got {max_depth}")
    return [fw for _, fw in _walk_tree(max_depth)]


def christoffel_tree_with_depth(max_depth: int) -> list[tuple[int, FactoredWord]]:
    """Like :func:`christoffel_tree` but each pair is tagged with its depth."""
    if max_depth < 0:
        raise DomainError(f"max_depth must be non-negative, got {max_depth}")
    return list(_walk_tree(max_depth))


def render_path(word: Word, fmt: str = "ascii") -> str:
    if fmt == "ascii":
        return _render_ascii(word)
    if fmt == "svg":
        return _render_svg(word)
    raise DomainError(f"unknown render format {fmt!r}; expected 'ascii' or 'svg'")


def _render_ascii(word: Word) -> str:
    # one column per step, one row per height; x is drawn as '_' on the
    # current row, y as '|' on the row it climbs into
    height = word.count(Y)
    rows = [[" "] * len(word) for _ in range(height + 1)]
    b = 0
    for col, letter in enumerate(word):
        if letter == X:
            rows[b][col] = "_"
        else:
            b += 1
            rows[b][col] = "|"
    return "\n".join("".join(r).rstrip() for r in reversed(rows))


def _render_svg(word: Word, unit: int = 40, margin: int = 10) -> str:
    path = lattice_path(word)
    p, q = path[-1]
    width, height = p * unit + 2 * margin, q * unit + 2 * margin

    def pt(a: int, b: int) -> tuple[int, int]:
        return margin + a * unit, margin + (q - b) * unit

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"  <title>Christoffel word {word}</title>",
        '  <g class="grid" stroke="#ccc" stroke-width="1">',
    ]
    for a in range(p + 1):
        (x1, y1), (x2, y2) = pt(a, 0), pt(a, q)
        out.append(f'    <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
    for b in range(q + 1):
        (x1, y1), (x2, y2) = pt(0, b), pt(p, b)
        out.append(f'    <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
    out.append("  </g>")
    out.append('  <g class="path" stroke="black" stroke-width="3" stroke-linecap="round">')
    for (a1, b1), (a2, b2) in zip(path, path[1:]):
        (x1, y1), (x2, y2) = pt(a1, b1), pt(a2, b2)
        out.append(f'    <line class="step" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
    out.append("  </g>")
    (x1, y1), (x2, y2) = pt(0, 0), pt(p, q)
    out.append(
        f'  <line class="segment" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
        'stroke="red" stroke-width="2" stroke-dasharray="6,4"/>'
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"
