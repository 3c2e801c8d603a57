"""The parabolic Hecke module over Z[q, q^-1] and its canonical basis.

The module is free on the sign sequences of a fixed n.  Right action of
the Kazhdan-Lusztig generator C_i on a standard basis vector indexed by w:

    longer move  w -> w'   gives  (vector at w') + q * (vector at w)
    shorter move w -> w'   gives  (vector at w') + q^-1 * (vector at w)
    not in quotient        kills the vector

Canonical basis elements are built by the usual recursion: walk up one
shorter element through its smallest admissible descent, then subtract
constant-term multiples of lower canonical elements.  In this quotient
the subtraction never fires; the recursion keeps it anyway and the table
records how often it was needed, which tests pin at zero.
"""

from __future__ import annotations

import dataclasses
import functools
from typing import Iterable

from .laurent import ONE, Q, QINV, ZERO, LaurentPoly
from .weyl import GenStep, Move, PMSequence, apply_generator, enumerate_wp, identity, length, reduced_word

__all__ = [
    "ModuleElement",
    "KLTable",
    "cs_action",
    "kl_basis",
    "kl_table",
    "kl_poly",
    "deodhar_product",
    "expand_in_kl",
]


@dataclasses.dataclass(frozen=True)
class ModuleElement:
    """A finitely supported L-linear combination of sign sequences."""

    n: int
    coeffs: tuple[tuple[PMSequence, LaurentPoly], ...]

    @classmethod
    def from_dict(cls, n: int, coeffs: dict[PMSequence, LaurentPoly]) -> "ModuleElement":
        items = tuple(sorted(((w, p) for w, p in coeffs.items() if p), key=lambda t: t[0].signs))
        return cls(n, items)

    @classmethod
    def standard(cls, w: PMSequence) -> "ModuleElement":
        return cls.from_dict(w.n, {w: ONE})

    def as_dict(self) -> dict[PMSequence, LaurentPoly]:
        return dict(self.coeffs)

    def coeff(self, w: PMSequence) -> LaurentPoly:
        for v, p in self.coeffs:
            if v == w:
                return p
        return ZERO

    def support(self) -> list[PMSequence]:
        return [w for w, _ in self.coeffs]

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        out = self.as_dict()
        for w, p in other.coeffs:
            out[w] = out.get(w, ZERO) + p
        return ModuleElement.from_dict(self.n, out)

    def __sub__(self, other: "ModuleElement") -> "ModuleElement":
        return self + other.scaled(LaurentPoly.const(-1))

    def scaled(self, poly: LaurentPoly) -> "ModuleElement":
        return ModuleElement.from_dict(self.n, {w: p * poly for w, p in self.coeffs})


def cs_action(x: ModuleElement, i: int) -> ModuleElement:
    """Right action of the i-th Kazhdan-Lusztig generator C_i."""
    out: dict[PMSequence, LaurentPoly] = {}

    def bump(w: PMSequence, p: LaurentPoly) -> None:
        out[w] = out.get(w, ZERO) + p

    for w, c in x.coeffs:
        step: GenStep = apply_generator(w, i)
        if step.move is Move.NOT_IN_QUOTIENT:
            continue
        assert step.result is not None
        bump(step.result, c)
        bump(w, c * (Q if step.move is Move.LONGER else QINV))
    return ModuleElement.from_dict(x.n, out)


@dataclasses.dataclass(frozen=True)
class KLTable:
    """Canonical basis elements for every sequence of a fixed n.

    ``corrections`` counts lower-order subtractions performed while
    building the table.
    """

    n: int
    rows: tuple[tuple[PMSequence, ModuleElement], ...]
    corrections: int

    def element(self, w: PMSequence) -> ModuleElement:
        for v, el in self.rows:
            if v == w:
                return el
        raise KeyError(str(w))

    def poly(self, v: PMSequence, w: PMSequence) -> LaurentPoly:
        """Coefficient of the standard vector at v inside the canonical
        element at w."""
        return self.element(w).coeff(v)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "rows": [
                {
                    "w": str(w),
                    "terms": [
                        {"wprime": str(v), "poly": p.to_json()} for v, p in el.coeffs
                    ],
                }
                for w, el in self.rows
            ],
        }


def _raise_via(elements: dict[PMSequence, ModuleElement], w: PMSequence, i: int) -> tuple[ModuleElement, int]:
    """Candidate canonical element at w from descent i, given canonical
    elements for everything shorter.  Returns (element, corrections used).
    """
    step = apply_generator(w, i)
    assert step.move is Move.SHORTER and step.result is not None
    y = cs_action(elements[step.result], i)
    corrections = 0
    for z in sorted(y.support(), key=length, reverse=True):
        if z == w:
            continue
        c0 = y.coeff(z).constant_term()
        if c0:
            y = y - elements[z].scaled(LaurentPoly.const(c0))
            corrections += 1
    assert y.coeff(w) == ONE, f"canonical element at {w} not monic"
    return y, corrections


@functools.lru_cache(maxsize=None)
def kl_table(n: int) -> KLTable:
    elements: dict[PMSequence, ModuleElement] = {}
    corrections = 0
    for w in sorted(enumerate_wp(n), key=length):
        if w == identity(n):
            elements[w] = ModuleElement.standard(w)
            continue
        i = next(k for k in range(n) if apply_generator(w, k).move is Move.SHORTER)
        el, used = _raise_via(elements, w, i)
        elements[w] = el
        corrections += used
    rows = tuple((w, elements[w]) for w in enumerate_wp(n))
    return KLTable(n, rows, corrections)


def kl_basis(w: PMSequence) -> ModuleElement:
    return kl_table(w.n).element(w)


def kl_poly(v: PMSequence, w: PMSequence) -> LaurentPoly:
    return kl_table(w.n).poly(v, w)


def deodhar_product(w: PMSequence) -> ModuleElement:
    """Product of C_i over one reduced word of w, applied to the identity
    basis vector.  In this quotient it lands exactly on the canonical
    basis element at w; a test asserts that."""
    x = ModuleElement.standard(identity(w.n))
    for i in reduced_word(w):
        x = cs_action(x, i)
    return x


def expand_in_kl(x: ModuleElement, table: KLTable) -> dict[PMSequence, LaurentPoly]:
    """Coordinates of x in the canonical basis, by triangular elimination
    from the longest support element down."""
    coords: dict[PMSequence, LaurentPoly] = {}
    rest = x
    while rest.coeffs:
        w = max(rest.support(), key=lambda v: (length(v), v.signs))
        c = rest.coeff(w)
        coords[w] = c
        rest = rest - table.element(w).scaled(c)
        assert not rest.coeff(w), "elimination failed to clear the top term"
    return coords
