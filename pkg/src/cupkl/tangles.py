"""Decorated planar tangles and the diagram algebra they span.

A tangle has m bottom points and n top points joined by non-crossing
strands, each strand carrying a dot parity.  Boundary points are encoded
1..m for the bottom face and m+1..m+n for the top face (JSON keeps the
same numbers).  Dots are constrained by accessibility, read off the
planar picture: a dot must be draggable to the left wall, so a dotted
cup tolerates no enclosing cup and no strand-to-strand edge whose top
endpoint lies to its left, a dotted cap is the mirror statement on
bottom endpoints, and only the leftmost edge of a tangle may be dotted.
Cups and caps never obstruct, since they hug their own face.

Stacking two tangles traces composite strands through the junction and
adds dot parities mod 2.  Closed loops reduce by value: a plain loop is
worth q + q^-1, and an odd loop either kills the product (the quotient
algebra, mode "tlhat") or survives as a single tracked dotted loop that
absorbs every other dot (mode "tl").  The same engine, cut off at a
module floor where caps kill (plain) or vanish (dotted), makes the span
of decorated cup diagrams a module over the algebra.

The algebra basis for a fixed n collects the even accessible decorated
(n, n) tangles without loops; for even n the fully capped tangles with
an odd number of plain cups are struck out.  Stacking one basis vector
over the reflection of another and splitting the result back apart is a
bijection onto that basis, which is the engine room of the cellular
structure exposed by cell_datum.
"""

from __future__ import annotations

import dataclasses
import functools
import itertools
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional

from .laurent import LOOP, ONE, ZERO, LaurentPoly
from .weyl import PMSequence, enumerate_wp
from .cups import DecoratedCupDiagram, decorated_cup
from .hecke import ModuleElement, cs_action, expand_in_kl, kl_basis, kl_table

__all__ = [
    "DecoratedTangle",
    "TangleScalarPair",
    "generator",
    "star",
    "tangle_of_cup",
    "cup_of_tangle",
    "concat_reduce",
    "mul",
    "act",
    "tlhat_basis",
    "CellDatum",
    "cell_datum",
    "cell_tangle",
    "cut_cell",
    "cell_module_action",
    "phi",
    "hecke_commutation_holds",
    "representation_matrix",
    "faithfulness_rank",
]

Strand = tuple[int, int, bool]


@dataclasses.dataclass(frozen=True)
class DecoratedTangle:
    """Non-crossing pairing of m bottom and n top points with dot flags.

    ``dotted_loop`` tracks the surviving dotted loop of mode "tl"; when
    set, every strand is plain (the loop has absorbed all dots).
    """

    m: int
    n: int
    strands: tuple[Strand, ...]
    dotted_loop: bool = False

    def __post_init__(self) -> None:
        points = [p for a, b, _ in self.strands for p in (a, b)]
        if sorted(points) != list(range(1, self.m + self.n + 1)):
            raise ValueError("strands must pair the boundary points exactly once")
        if any(a >= b for a, b, _ in self.strands):
            raise ValueError("strand endpoints must be listed (small, large)")
        if list(self.strands) != sorted(self.strands):
            raise ValueError("strands must be listed sorted")
        pos = self._positions()
        for (a, b, _), (c, d, _) in itertools.combinations(self.strands, 2):
            pa, pb = sorted((pos[a], pos[b]))
            pc, pd = sorted((pos[c], pos[d]))
            if pa < pc < pb < pd or pc < pa < pd < pb:
                raise ValueError(f"strands ({a},{b}) and ({c},{d}) cross")
        if self.dotted_loop and any(d for *_, d in self.strands):
            raise ValueError("a tracked dotted loop absorbs every strand dot")
        edges = self.edge_strands()
        for p, q, dotted in self.strands:
            if not dotted:
                continue
            if q <= self.m:  # cap
                if any(c < p < q < d for c, d, _ in self.cap_strands()):
                    raise ValueError(f"dotted cap ({p},{q}) is enclosed")
                if any(a < p for a, _, _ in edges):
                    raise ValueError(f"dotted cap ({p},{q}) has an edge to its left")
            elif p > self.m:  # cup
                i, j = p - self.m, q - self.m
                if any(c - self.m < i < j < d - self.m for c, d, _ in self.cup_strands()):
                    raise ValueError(f"dotted cup ({i},{j}) is enclosed")
                if any(b - self.m < i for _, b, _ in edges):
                    raise ValueError(f"dotted cup ({i},{j}) has an edge to its left")
            else:  # edge
                if any(a < p for a, _, _ in edges):
                    raise ValueError(f"dotted edge at {p} is not the leftmost edge")

    def _positions(self) -> dict[int, int]:
        # planar boundary order: bottom left to right, then top right to left
        pos = {p: p - 1 for p in range(1, self.m + 1)}
        for j in range(1, self.n + 1):
            pos[self.m + j] = self.m + self.n - j
        return pos

    def cap_strands(self) -> list[Strand]:
        return [s for s in self.strands if s[1] <= self.m]

    def cup_strands(self) -> list[Strand]:
        return [s for s in self.strands if s[0] > self.m]

    def edge_strands(self) -> list[Strand]:
        return [s for s in self.strands if s[0] <= self.m < s[1]]

    def dot_count(self) -> int:
        return sum(1 for *_, d in self.strands if d)

    def to_json(self) -> dict:
        data = {
            "m": self.m,
            "n": self.n,
            "strands": [{"ends": [a, b], "dotted": d} for a, b, d in self.strands],
        }
        if self.dotted_loop:
            data["dotted_loop"] = True
        return data

    @classmethod
    def from_json(cls, data: Mapping) -> "DecoratedTangle":
        return cls(
            int(data["m"]),
            int(data["n"]),
            tuple(
                sorted(
                    (min(s["ends"]), max(s["ends"]), bool(s["dotted"]))
                    for s in data["strands"]
                )
            ),
            bool(data.get("dotted_loop", False)),
        )

    def to_ascii(self) -> str:
        """Four rows: top labels, top arcs, bottom arcs, bottom labels.
        Cup and cap ends print as ( and ), through strands as | on both
        faces, a dot as * next to the left (arc) or single (edge) end."""

        def face(points: dict[int, str], size: int) -> str:
            return "".join(points.get(p, "  ") for p in range(1, size + 1)).rstrip()

        top: dict[int, str] = {}
        bottom: dict[int, str] = {}
        for p, q, d in self.strands:
            star_ = "*" if d else " "
            if p > self.m:
                top[p - self.m] = "(" + star_
                top[q - self.m] = ") "
            elif q <= self.m:
                bottom[p] = "(" + star_
                bottom[q] = ") "
            else:
                bottom[p] = "|" + star_
                top[q - self.m] = "|" + star_
        lab = lambda k: "".join(f"{p % 10:<2}" for p in range(1, k + 1)).rstrip()
        return "\n".join([lab(self.n), face(top, self.n), face(bottom, self.m), lab(self.m)])


@dataclasses.dataclass(frozen=True)
class TangleScalarPair:
    """A scalar multiple of one tangle; zero is (0, None)."""

    coeff: LaurentPoly
    tangle: Optional[DecoratedTangle]

    @classmethod
    def zero(cls) -> "TangleScalarPair":
        return cls(ZERO, None)

    def is_zero(self) -> bool:
        return self.tangle is None or not self.coeff


def identity_tangle(n: int) -> DecoratedTangle:
    return DecoratedTangle(n, n, tuple((j, n + j, False) for j in range(1, n + 1)))


def generator(n: int, i: int) -> DecoratedTangle:
    """The i-th algebra generator: cap and cup joining two neighbours,
    identity elsewhere.  Generator 0 is generator 1 with both new
    strands dotted."""
    if n < 2:
        raise ValueError("generators need n >= 2")
    if not 0 <= i < n:
        raise ValueError(f"generator index {i} out of range for n={n}")
    a = max(i, 1)
    dotted = i == 0
    strands = [(a, a + 1, dotted), (n + a, n + a + 1, dotted)]
    strands += [(j, n + j, False) for j in range(1, n + 1) if j not in (a, a + 1)]
    return DecoratedTangle(n, n, tuple(sorted(strands)))


def star(t: DecoratedTangle) -> DecoratedTangle:
    """Reflection swapping the two faces."""
    if t.dotted_loop:
        raise ValueError("cannot reflect a tracked dotted loop element")

    def move(p: int) -> int:
        return t.n + p if p <= t.m else p - t.m

    strands = tuple(
        sorted((min(move(a), move(b)), max(move(a), move(b)), d) for a, b, d in t.strands)
    )
    return DecoratedTangle(t.n, t.m, strands)


def tangle_of_cup(d: DecoratedCupDiagram) -> DecoratedTangle:
    """A decorated cup diagram as a tangle: one bottom point per edge."""
    edge_tops = [p for p, _ in d.edges]
    m = len(edge_tops)
    strands = [(k + 1, m + p, dot) for k, (p, dot) in enumerate(d.edges)]
    strands += [(m + i, m + j, dot) for i, j, dot in d.cups]
    return DecoratedTangle(m, d.n, tuple(sorted(strands)))


def cup_of_tangle(t: DecoratedTangle) -> DecoratedCupDiagram:
    """Inverse of tangle_of_cup; requires every bottom point to feed an
    edge."""
    if t.cap_strands():
        raise ValueError("caps cannot appear in a cup diagram")
    cups = tuple(sorted((p - t.m, q - t.m, d) for p, q, d in t.cup_strands()))
    edges = tuple(sorted((q - t.m, d) for _, q, d in t.edge_strands()))
    return DecoratedCupDiagram(t.n, cups, edges)


def _stack(lower: DecoratedTangle, upper: DecoratedTangle) -> tuple[list[tuple[int, int, int]], list[int]]:
    """Glue upper's bottom face onto lower's top face.

    Returns composite strands as (a, b, parity) in the composite
    numbering (bottom 1..lower.m, top lower.m+1..lower.m+upper.n) plus
    the parity of every closed loop.  Tracked dotted loops of the inputs
    join the loop list."""
    if lower.n != upper.m:
        raise ValueError("face sizes do not match")
    m, k = lower.m, lower.n

    def partners(t: DecoratedTangle) -> dict[int, tuple[int, bool]]:
        out: dict[int, tuple[int, bool]] = {}
        for a, b, d in t.strands:
            out[a] = (b, d)
            out[b] = (a, d)
        return out

    lowp, upp = partners(lower), partners(upper)
    seen_low: set[int] = set()
    seen_up: set[int] = set()

    def follow(side: str, p: int) -> tuple[str, int, int]:
        parity = 0
        while True:
            if side == "low":
                q, d = lowp[p]
                seen_low.update((p, q))
            else:
                q, d = upp[p]
                seen_up.update((p, q))
            parity ^= d
            if side == "low" and q > m:
                side, p = "up", q - m
            elif side == "up" and q <= k:
                side, p = "low", m + q
            else:
                return side, q, parity

    strands: list[tuple[int, int, int]] = []
    starts = [("low", i) for i in range(1, m + 1)]
    starts += [("up", upper.m + j) for j in range(1, upper.n + 1)]
    for side, p in starts:
        if (p in seen_low) if side == "low" else (p in seen_up):
            continue
        end_side, q, parity = follow(side, p)
        a = p if side == "low" else m + (p - upper.m)
        b = q if end_side == "low" else m + (q - upper.m)
        strands.append((min(a, b), max(a, b), parity))

    loops = [1] * (lower.dotted_loop + upper.dotted_loop)
    for j in range(1, k + 1):
        if m + j in seen_low:
            continue
        parity = 0
        side, p = "low", m + j
        while True:
            if side == "low":
                q, d = lowp[p]
                seen_low.update((p, q))
            else:
                q, d = upp[p]
                seen_up.update((p, q))
            parity ^= d
            if side == "low" and q > m:
                side, p = "up", q - m
            elif side == "up" and q <= k:
                side, p = "low", m + q
            else:
                raise AssertionError("closed loop leaked to the boundary")
            if side == "low" and p == m + j:
                break
        loops.append(parity)
    return strands, loops


def concat_reduce(a: DecoratedTangle, b: DecoratedTangle, mode: str = "tlhat") -> TangleScalarPair:
    """Stack b on top of a and reduce loops.

    Mode "tlhat": an odd loop kills the product.  Mode "tl": the first
    odd loop persists as a tracked dotted loop, absorbing every other
    dot; all remaining loops count plain."""
    if mode not in ("tlhat", "tl"):
        raise ValueError(f"unknown reduction mode {mode!r}")
    strands, loops = _stack(a, b)
    odd = sum(1 for p in loops if p)
    coeff = ONE
    dotted_loop = False
    if odd:
        if mode == "tlhat":
            return TangleScalarPair.zero()
        dotted_loop = True
        strands = [(p, q, 0) for p, q, _ in strands]
        plain = len(loops) - 1
    else:
        plain = len(loops)
    for _ in range(plain):
        coeff = coeff * LOOP
    tangle = DecoratedTangle(
        a.m, b.n, tuple(sorted((p, q, bool(d)) for p, q, d in strands)), dotted_loop
    )
    return TangleScalarPair(coeff, tangle)


def mul(x: DecoratedTangle, y: DecoratedTangle, mode: str = "tlhat") -> TangleScalarPair:
    """Product with x stacked on top of y."""
    return concat_reduce(y, x, mode)


def act(t: DecoratedTangle, d: DecoratedCupDiagram) -> tuple[LaurentPoly, Optional[DecoratedCupDiagram]]:
    """Act by a tangle on a decorated cup diagram, t on top.

    Loops reduce in quotient mode.  A composite strand closing onto the
    module floor is a cap there: plain kills the element, dotted is
    erased at no cost.  The survivor is a scalar times one diagram."""
    if t.m != d.n:
        raise ValueError("tangle bottom must match the diagram size")
    lower = tangle_of_cup(d)
    strands, loops = _stack(lower, t)
    if any(p for p in loops):
        return ZERO, None
    coeff = ONE
    for _ in loops:
        coeff = coeff * LOOP
    floor = lower.m
    cups: list[tuple[int, int, bool]] = []
    edges: list[tuple[int, bool]] = []
    for a, b, parity in strands:
        if b <= floor:  # cap on the module floor
            if not parity:
                return ZERO, None
            continue
        if a > floor:
            cups.append((a - floor, b - floor, bool(parity)))
        else:
            edges.append((b - floor, bool(parity)))
    return coeff, DecoratedCupDiagram(t.n, tuple(sorted(cups)), tuple(sorted(edges)))


def _noncrossing_pairings(points: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
    if not points:
        yield ()
        return
    first, rest = points[0], points[1:]
    for idx in range(0, len(rest), 2):
        inside, outside = rest[:idx], rest[idx + 1 :]
        for mi in _noncrossing_pairings(inside):
            for mo in _noncrossing_pairings(outside):
                yield ((first, rest[idx]), *mi, *mo)


@functools.lru_cache(maxsize=None)
def tlhat_basis(n: int) -> tuple[DecoratedTangle, ...]:
    """Basis of the quotient algebra: even accessible loop-free decorated
    (n, n) tangles, minus (for even n) the fully capped tangles with an
    odd number of plain cups."""
    if n < 3:
        raise ValueError("the algebra layer supports n >= 3")
    boundary = tuple(range(1, n + 1)) + tuple(range(2 * n, n, -1))
    out: list[DecoratedTangle] = []
    for pairing in _noncrossing_pairings(boundary):
        pairs = [(min(a, b), max(a, b)) for a, b in pairing]
        for bits in range(1 << len(pairs)):
            try:
                t = DecoratedTangle(
                    n,
                    n,
                    tuple(sorted((a, b, bool(bits >> k & 1)) for k, (a, b) in enumerate(pairs))),
                )
            except ValueError:
                continue
            if t.dot_count() % 2:
                continue
            if not t.edge_strands():
                plain_cups = sum(1 for *_, dot in t.cup_strands() if not dot)
                if plain_cups % 2:
                    continue
            out.append(t)
    return tuple(sorted(out, key=lambda t: t.strands))


# -- cellular structure ----------------------------------------------------


@dataclasses.dataclass(frozen=True)
class CellDatum:
    """Cell poset (through-strand counts, largest first) and the cup
    diagrams indexing each cell."""

    n: int
    lambdas: tuple[int, ...]
    m_sets: tuple[tuple[DecoratedCupDiagram, ...], ...]

    def m_of(self, lam: int) -> tuple[DecoratedCupDiagram, ...]:
        return self.m_sets[self.lambdas.index(lam)]


def cell_datum(n: int) -> CellDatum:
    lambdas = tuple(range(n, -1, -2))
    by_lam: dict[int, list[DecoratedCupDiagram]] = {lam: [] for lam in lambdas}
    for w in enumerate_wp(n):
        d = decorated_cup(w)
        by_lam[len(d.edges)].append(d)
    return CellDatum(n, lambdas, tuple(tuple(by_lam[lam]) for lam in lambdas))


def cell_tangle(alpha: DecoratedCupDiagram, beta: DecoratedCupDiagram) -> DecoratedTangle:
    """Basis tangle with top half alpha and bottom half the reflection
    of beta; dots on joined edges merge by parity."""
    if len(alpha.edges) != len(beta.edges):
        raise ValueError("halves must have the same number of edges")
    strands, loops = _stack(star(tangle_of_cup(beta)), tangle_of_cup(alpha))
    assert not loops, "gluing two cup diagram halves cannot close a loop"
    return DecoratedTangle(
        beta.n, alpha.n, tuple(sorted((p, q, bool(d)) for p, q, d in strands))
    )


def cut_cell(x: DecoratedTangle) -> tuple[int, DecoratedCupDiagram, DecoratedCupDiagram]:
    """Split a basis tangle into (through count, top half, bottom half).

    Dot parities on a through strand distribute over the two leftmost
    edges: a dotted strand puts its dot on one side, a plain strand puts
    either none or a cancelling dot on both.  The parity rule for
    decorated cup diagrams picks exactly one of the two options."""
    if x.m != x.n:
        raise ValueError("only square tangles split into cell halves")
    n = x.n
    cups = tuple(sorted((p - n, q - n, d) for p, q, d in x.cup_strands()))
    caps = tuple(sorted((p, q, d) for p, q, d in x.cap_strands()))
    through = sorted(x.edge_strands())
    lam = len(through)
    assert sum(1 for s in through if s[2]) <= 1, "only the leftmost strand may be dotted"
    candidates = []
    if not through:
        splits: list[tuple[bool, bool]] = [(False, False)]
    else:
        parity = through[0][2]
        splits = [(parity, False), (not parity, True)]
    for dot_top, dot_bottom in splits:
        try:
            alpha = DecoratedCupDiagram(
                n,
                cups,
                tuple(
                    sorted(
                        (q - n, dot_top if (p, q, d) == through[0] else d)
                        for p, q, d in through
                    )
                ),
            )
            beta = DecoratedCupDiagram(
                n,
                caps,
                tuple(
                    sorted(
                        (p, dot_bottom if (p, q, d) == through[0] else d)
                        for p, q, d in through
                    )
                ),
            )
        except ValueError:
            continue
        candidates.append((alpha, beta))
    assert len(candidates) == 1, "dot placement across the cut must be unique"
    alpha, beta = candidates[0]
    return lam, alpha, beta


def cell_module_action(
    x: DecoratedTangle,
    lam: int,
    alpha: DecoratedCupDiagram,
    beta: DecoratedCupDiagram,
    mode: str = "tlhat",
) -> Optional[tuple[LaurentPoly, DecoratedCupDiagram]]:
    """Action of x on the cell-module vector labelled alpha, computed
    through the auxiliary half beta.  None when the product falls into a
    lower cell or dies."""
    res = mul(x, cell_tangle(alpha, beta), mode)
    if res.is_zero():
        return None
    assert res.tangle is not None
    if len(res.tangle.edge_strands()) < lam:
        return None
    lam2, alpha2, beta2 = cut_cell(res.tangle)
    assert lam2 == lam
    assert beta2 == beta, "the auxiliary half must come through unchanged"
    return res.coeff, alpha2


# -- comparison with the Hecke module --------------------------------------


def phi(x: ModuleElement) -> dict[DecoratedCupDiagram, LaurentPoly]:
    """Image of a Hecke-module element under canonical-basis-to-diagram
    transport."""
    coords = expand_in_kl(x, kl_table(x.n))
    return {decorated_cup(z): c for z, c in coords.items()}

def hecke_commutation_holds(w: PMSequence, i: int) -> bool:
    """Does acting by generator i on the diagram of w match transporting
    the Hecke action of C_i on the canonical basis element of w?"""
    lhs = phi(cs_action(kl_basis(w), i))
    coeff, diagram = act(generator(w.n, i), decorated_cup(w))
    rhs = {diagram: coeff} if diagram is not None and coeff else {}
    return lhs == rhs


# -- representation on cup diagrams ----------------------------------------


def representation_matrix(n: int, t: DecoratedTangle) -> list[list[LaurentPoly]]:
    """Matrix of the action of t on decorated cup diagrams, rows and
    columns in enumeration order of the underlying sequences."""
    order = [decorated_cup(w) for w in enumerate_wp(n)]
    index = {d: i for i, d in enumerate(order)}
    matrix = [[ZERO] * len(order) for _ in order]
    for j, d in enumerate(order):
        coeff, image = act(t, d)
        if image is not None and coeff:
            matrix[index[image]][j] = coeff
    return matrix


def _rational_rank(rows: list[dict[int, Fraction]]) -> int:
    rows = [dict(r) for r in rows if r]
    rank = 0
    while rows:
        piv_col = min(min(r) for r in rows)
        piv = next(r for r in rows if piv_col in r)
        rows.remove(piv)
        rank += 1
        pv = piv[piv_col]
        reduced = []
        for r in rows:
            if piv_col in r:
                f = r[piv_col] / pv
                nr = {}
                for c in set(r) | set(piv):
                    v = r.get(c, Fraction(0)) - f * piv.get(c, Fraction(0))
                    if v:
                        nr[c] = v
                if nr:
                    reduced.append(nr)
            else:
                reduced.append(r)
        rows = reduced
    return rank


def faithfulness_rank(n: int, q_value: Fraction) -> tuple[int, int]:
    """Rank of the vectorized basis action on cup diagrams at an exact
    rational q, against the basis size."""
    basis = tlhat_basis(n)
    size = 2 ** (n - 1)
    rows = []
    for b in basis:
        row: dict[int, Fraction] = {}
        matrix = representation_matrix(n, b)
        for i in range(size):
            for j in range(size):
                if matrix[i][j]:
                    row[i * size + j] = matrix[i][j].eval_rational(q_value)
        rows.append(row)
    return _rational_rank(rows), len(basis)
