"""Minimal coset representatives for a type D Weyl group modulo its type A
parabolic, realized as sign sequences.

An element is a sequence of n signs with an even number of minuses; there
are 2^(n-1) of them.  Generators are indexed 0..n-1.  For i >= 1 the
generator swaps adjacent positions (i, i+1) and moves inside the quotient
only when those entries differ; generator 0 flips the first two entries
and applies only when they agree.  Each element carries a self-conjugate
Young diagram inside the n x n square, from which lengths and one
canonical reduced word are read off.
"""

from __future__ import annotations

import dataclasses
import enum
from typing import Iterator, Optional

__all__ = [
    "PMSequence",
    "Move",
    "GenStep",
    "identity",
    "enumerate_wp",
    "apply_generator",
    "young_diagram",
    "reduced_word",
    "length",
]

PLUS = "+"
MINUS = "-"


@dataclasses.dataclass(frozen=True, order=True)
class PMSequence:
    """A sign sequence of length n with evenly many minuses.

    Ordering is inherited from the sign string; since "+" sorts before "-"
    in ASCII this is exactly lexicographic order with Plus < Minus.
    """

    signs: str

    def __post_init__(self) -> None:
        if not self.signs:
            raise ValueError("empty sequence: n must be at least 1")
        bad = set(self.signs) - {PLUS, MINUS}
        if bad:
            raise ValueError(f"signs must be '+' or '-', got {bad!r}")
        if self.signs.count(MINUS) % 2:
            raise ValueError(f"odd number of minuses in {self.signs!r}")

    @property
    def n(self) -> int:
        return len(self.signs)

    def sign(self, i: int) -> str:
        """Entry at 1-based position i."""
        return self.signs[i - 1]

    def __str__(self) -> str:
        return self.signs

    def __iter__(self) -> Iterator[str]:
        return iter(self.signs)


def identity(n: int) -> PMSequence:
    return PMSequence(PLUS * n)


def enumerate_wp(n: int) -> list[PMSequence]:
    """All 2^(n-1) elements, lexicographic with Plus < Minus, identity first."""
    if n < 1:
        raise ValueError("n must be at least 1")
    out = []
    for bits in range(1 << n):
        signs = "".join(MINUS if bits >> (n - 1 - k) & 1 else PLUS for k in range(n))
        if signs.count(MINUS) % 2 == 0:
            out.append(PMSequence(signs))
    return out


class Move(enum.Enum):
    LONGER = "longer"
    SHORTER = "shorter"
    NOT_IN_QUOTIENT = "not_in_quotient"


@dataclasses.dataclass(frozen=True)
class GenStep:
    move: Move
    result: Optional[PMSequence]


def apply_generator(w: PMSequence, i: int) -> GenStep:
    """Right-multiply by generator i, staying inside the quotient.

    Returns the new element tagged LONGER or SHORTER, or NOT_IN_QUOTIENT
    with no result when the product leaves the set of minimal coset
    representatives (for i >= 1: equal entries at i, i+1; for i = 0:
    unequal entries at 1, 2).
    """
    if not 0 <= i < w.n:
        raise ValueError(f"generator index {i} out of range for n={w.n}")
    s = w.signs
    if i == 0:
        a, b = s[0], s[1]
        if a != b:
            return GenStep(Move.NOT_IN_QUOTIENT, None)
        flipped = (MINUS if a == PLUS else PLUS) * 2
        res = PMSequence(flipped + s[2:])
        return GenStep(Move.LONGER if a == PLUS else Move.SHORTER, res)
    a, b = s[i - 1], s[i]
    if a == b:
        return GenStep(Move.NOT_IN_QUOTIENT, None)
    res = PMSequence(s[: i - 1] + b + a + s[i + 1 :])
    return GenStep(Move.LONGER if (a, b) == (MINUS, PLUS) else Move.SHORTER, res)


def young_diagram(w: PMSequence) -> frozenset[tuple[int, int]]:
    """Self-conjugate Young diagram of w inside the n x n square.

    Boxes are (row, col), zero-based.  Walk from the upper-right corner
    reading the signs right to left, a minus moving down and a plus moving
    left; that reaches the main diagonal, and reflecting the walk across
    the diagonal closes the boundary.  The diagram is everything left of
    the walk.
    """
    boxes: set[tuple[int, int]] = set()
    row, col = 0, w.n
    for sign in reversed(w.signs):
        if sign == MINUS:
            boxes.update((row, c) for c in range(col))
            row += 1
        else:
            col -= 1
    boxes.update([(c, r) for r, c in boxes])
    return frozenset(boxes)


def _units(diagram: frozenset[tuple[int, int]]) -> list[tuple[int, int, int]]:
    """Decompose a self-conjugate diagram into letter-emitting units.

    Diagonal boxes come in consecutive pairs; each pair spans a 2 x 2
    block emitting letter 0, anchored at its top-left box.  Every
    strictly-upper box outside those blocks emits letter (col - row).
    Returns (row, col, letter) triples.
    """
    diag_count = sum(1 for r, c in diagram if r == c)
    assert diag_count % 2 == 0, "diagonal of a self-conjugate diagram is even here"
    units = [(2 * j, 2 * j, 0) for j in range(diag_count // 2)]
    for r, c in diagram:
        if c <= r:
            continue
        if c == r + 1 and r % 2 == 0 and r + 1 < diag_count:
            continue  # upper box of a 2 x 2 block, already counted
        units.append((r, c, c - r))
    return sorted(units)


def reduced_word(w: PMSequence) -> tuple[int, ...]:
    """One canonical reduced word for w, in generator indices.

    Units of the Young diagram are emitted in row-major order of their
    anchor box.  Applying the word letter by letter from the identity
    gives a LONGER move at every step and lands on w; tests replay this.
    """
    return tuple(letter for _, _, letter in _units(young_diagram(w)))


def length(w: PMSequence) -> int:
    """Coxeter length of w as a minimal coset representative."""
    diagram = young_diagram(w)
    diag_count = sum(1 for r, c in diagram if r == c)
    blocks = diag_count // 2
    off_block = len(diagram) - 4 * blocks
    return off_block // 2 + blocks
