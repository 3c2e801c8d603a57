"""Cup diagrams attached to sign sequences, in two pictures.

The full picture lives on 4n boundary points -2n..-1, 1..2n.  A sign
sequence extends to a weight on those points (antisymmetric in the middle,
frozen outside), the weight has a unique planar matching, and repeatedly
exchanging the endpoints of the two innermost arcs that cross the middle
turns the matching into the full cup diagram: crossings survive only
inside the marked "linked" pairs of arcs.

Cutting to the points 1..n produces the small picture, a decorated cup
diagram: cups and vertical edges on n points, some carrying a dot.  Dots
record where a linked pair was severed.  The small picture also has a
direct construction straight from the signs, and both pictures compute
the same polynomials; tests hold the two routes together.

Conventions for a weight label at a point: a plus is Down, a minus is Up.
An arc is oriented clockwise when its left end is Up and its right end is
Down; counterclockwise when the reverse.  Dots never constrain
orientations in the full picture, but in the cut picture they flip which
label pattern counts as degree zero.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable, Mapping, Optional

from .laurent import ZERO, LaurentPoly
from .weyl import MINUS, PLUS, PMSequence, enumerate_wp

__all__ = [
    "Weight",
    "FullCupDiagram",
    "DecoratedCupDiagram",
    "weight_of",
    "matching",
    "cup_diagram",
    "cut",
    "decorated_cup",
    "orient",
    "orientations_of",
    "kl_poly_diagrammatic",
    "cut_degree",
    "enumerate_decorated",
]

Arc = tuple[int, int]


@dataclasses.dataclass(frozen=True)
class Weight:
    """Up/Down labels on the 4n points, determined by a core sign string.

    Core positions 1..n read the string (plus Down, minus Up); mirror
    positions -n..-1 carry the opposite label; points above n are Up and
    below -n are Down.
    """

    core: str

    def __post_init__(self) -> None:
        if not self.core or set(self.core) - {PLUS, MINUS}:
            raise ValueError(f"bad core {self.core!r}")
        if self.core.count(MINUS) % 2:
            raise ValueError(f"odd number of minuses in weight core {self.core!r}")

    @property
    def n(self) -> int:
        return len(self.core)

    def up(self, p: int) -> bool:
        return _label_up(self.core, p)

    def points(self) -> list[int]:
        n = self.n
        return [*range(-2 * n, 0), *range(1, 2 * n + 1)]


def _label_up(core: str, p: int) -> bool:
    """Label lookup that tolerates odd cores, for internal enumeration."""
    n = len(core)
    if not 1 <= abs(p) <= 2 * n:
        raise ValueError(f"point {p} out of range for n={n}")
    if 1 <= p <= n:
        return core[p - 1] == MINUS
    if p > n:
        return True
    if p < -n:
        return False
    return not _label_up(core, -p)


def weight_of(w: PMSequence) -> Weight:
    return Weight(w.signs)


@dataclasses.dataclass(frozen=True)
class FullCupDiagram:
    """2n arcs on the 4n points, plus the linked pairs.

    Arcs are (left, right) endpoint tuples.  Members of a linked pair
    cross each other; nothing else crosses.
    """

    n: int
    arcs: frozenset[Arc]
    linked_pairs: frozenset[frozenset[Arc]]

    def partner(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for a, b in self.arcs:
            out[a] = b
            out[b] = a
        return out


def matching(alpha: Weight) -> FullCupDiagram:
    """The unique planar matching of a weight: repeatedly connect an
    adjacent Down-then-Up pair and remove it.  Implemented with a stack."""
    stack: list[int] = []
    arcs: set[Arc] = set()
    for p in alpha.points():
        if alpha.up(p):
            if not stack:
                raise ValueError(f"weight {alpha.core!r} has no planar matching")
            arcs.add((stack.pop(), p))
        else:
            stack.append(p)
    if stack:
        raise ValueError(f"weight {alpha.core!r} has no planar matching")
    return FullCupDiagram(alpha.n, frozenset(arcs), frozenset())


def cup_diagram(w: PMSequence) -> FullCupDiagram:
    """Full cup diagram of a sequence.

    Starting from the planar matching of its weight, the arcs crossing
    the middle are pairwise nested; take the two innermost, trade their
    outer ends, and mark the traded pair linked.  Repeat until every
    middle-crossing arc is linked.
    """
    arcs = set(matching(weight_of(w)).arcs)
    linked: list[frozenset[Arc]] = []
    while True:
        taken = {a for pair in linked for a in pair}
        crossing = sorted(
            (a for a in arcs if a[0] < 0 < a[1] and a not in taken),
            key=lambda a: a[0],
            reverse=True,
        )
        if not crossing:
            break
        assert len(crossing) % 2 == 0, "middle-crossing arcs come in even number"
        (p, q), (r, s) = crossing[0], crossing[1]
        arcs -= {(p, q), (r, s)}
        pair = frozenset({(p, s), (r, q)})
        arcs |= pair
        linked.append(pair)
    return FullCupDiagram(w.n, frozenset(arcs), frozenset(linked))


@dataclasses.dataclass(frozen=True)
class DecoratedCupDiagram:
    """Cups and edges on the points 1..n, each possibly dotted.

    Validity is enforced on construction: cups are pairwise non-crossing,
    no edge sits under a cup, dotted edges + plain cups come in even
    total, at most one edge is dotted, and every dot is accessible (a
    dotted cup is not nested and has no edge to its left; a dotted edge
    is the leftmost edge).
    """

    n: int
    cups: tuple[tuple[int, int, bool], ...]
    edges: tuple[tuple[int, bool], ...]

    def __post_init__(self) -> None:
        covered: list[int] = []
        for i, j, _ in self.cups:
            if not 1 <= i < j <= self.n:
                raise ValueError(f"bad cup ({i}, {j}) for n={self.n}")
            covered += [i, j]
        for p, _ in self.edges:
            if not 1 <= p <= self.n:
                raise ValueError(f"bad edge at {p} for n={self.n}")
            covered.append(p)
        if sorted(covered) != list(range(1, self.n + 1)):
            raise ValueError("cups and edges must cover 1..n exactly once")
        if list(self.cups) != sorted(self.cups) or list(self.edges) != sorted(self.edges):
            raise ValueError("cups and edges must be listed sorted")
        for i, j, _ in self.cups:
            for k, l, _ in self.cups:
                if i < k < j < l:
                    raise ValueError(f"cups ({i},{j}) and ({k},{l}) cross")
            for p, _ in self.edges:
                if i < p < j:
                    raise ValueError(f"edge at {p} sits under cup ({i},{j})")
        if sum(1 for _, d in self.edges if d) > 1:
            raise ValueError("at most one dotted edge")
        plain_cups = sum(1 for *_, d in self.cups if not d)
        dotted_edges = sum(1 for _, d in self.edges if d)
        if (plain_cups + dotted_edges) % 2:
            raise ValueError("parity: plain cups plus dotted edges must be even")
        for i, j, d in self.cups:
            if not d:
                continue
            if any(k < i and j < l for k, l, _ in self.cups):
                raise ValueError(f"dotted cup ({i},{j}) is nested, dot not accessible")
            if any(p < i for p, _ in self.edges):
                raise ValueError(f"dotted cup ({i},{j}) has an edge to its left")
        for p, d in self.edges:
            if d and any(p2 < p for p2, _ in self.edges):
                raise ValueError(f"dotted edge at {p} is not the leftmost edge")

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "cups": [{"from": i, "to": j, "dotted": d} for i, j, d in self.cups],
            "edges": [{"at": p, "dotted": d} for p, d in self.edges],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "DecoratedCupDiagram":
        return cls(
            int(data["n"]),
            tuple(sorted((int(c["from"]), int(c["to"]), bool(c["dotted"])) for c in data["cups"])),
            tuple(sorted((int(e["at"]), bool(e["dotted"])) for e in data["edges"])),
        )

    def to_ascii(self) -> str:
        """Two fixed rows: point labels, then one column per point with
        ( ) for cup ends, | for an edge, and * marking a dotted strand at
        its left (cup) or only (edge) point."""
        labels = "".join(f"{p % 10:<2}" for p in range(1, self.n + 1))
        cells = {}
        for i, j, d in self.cups:
            cells[i] = "(" + ("*" if d else " ")
            cells[j] = ") "
        for p, d in self.edges:
            cells[p] = "|" + ("*" if d else " ")
        arcs = "".join(cells[p] for p in range(1, self.n + 1))
        return labels.rstrip() + "\n" + arcs.rstrip()


def cut(c: FullCupDiagram) -> DecoratedCupDiagram:
    """Restrict a full cup diagram to the points 1..n.

    A plain arc inside 1..n stays a plain cup; a plain arc leaving the
    range becomes a plain edge.  A linked pair keeps its endpoints inside
    1..n, as a dotted cup (two survivors), a dotted edge (one), or
    nothing (none)."""
    n = c.n
    in_range = lambda p: 1 <= p <= n
    taken = {a for pair in c.linked_pairs for a in pair}
    cups: list[tuple[int, int, bool]] = []
    edges: list[tuple[int, bool]] = []
    for a, b in sorted(c.arcs - taken):
        if in_range(a) and in_range(b):
            cups.append((a, b, False))
        elif in_range(a) or in_range(b):
            edges.append((a if in_range(a) else b, False))
    for pair in c.linked_pairs:
        kept = sorted(p for arc in pair for p in arc if in_range(p))
        if len(kept) == 2:
            cups.append((kept[0], kept[1], True))
        elif len(kept) == 1:
            edges.append((kept[0], True))
    return DecoratedCupDiagram(n, tuple(sorted(cups)), tuple(sorted(edges)))


def decorated_cup(w: PMSequence) -> DecoratedCupDiagram:
    """Decorated cup diagram straight from the signs.

    Join adjacent plus-then-minus pairs by plain cups until none remain
    (skipping already joined points), pair the leftover minuses left to
    right by dotted cups, and drop edges from everything else, dotted
    exactly at a leftover minus."""
    n = w.n
    signs = w.signs
    joined = [False] * n
    cups: list[tuple[int, int, bool]] = []
    changed = True
    while changed:
        changed = False
        prev: Optional[int] = None
        for k in range(n):
            if joined[k]:
                continue
            if prev is not None and signs[prev] == PLUS and signs[k] == MINUS:
                cups.append((prev + 1, k + 1, False))
                joined[prev] = joined[k] = True
                changed = True
                prev = None
            else:
                prev = k
    minuses = [k for k in range(n) if not joined[k] and signs[k] == MINUS]
    for a, b in zip(minuses[0::2], minuses[1::2]):
        cups.append((a + 1, b + 1, True))
        joined[a] = joined[b] = True
    edges = [(k + 1, signs[k] == MINUS) for k in range(n) if not joined[k]]
    return DecoratedCupDiagram(n, tuple(sorted(cups)), tuple(sorted(edges)))


def orient(v: Weight, c: FullCupDiagram) -> Optional[int]:
    """Number of clockwise arcs when v orients c, else None.

    v orients c when every arc has one Up and one Down end; dots are
    invisible here.  The clockwise count is always even."""
    if v.n != c.n:
        raise ValueError("weight and diagram sizes differ")
    clockwise = 0
    for a, b in c.arcs:
        ua, ub = v.up(a), v.up(b)
        if ua == ub:
            return None
        if ua:
            clockwise += 1
    assert clockwise % 2 == 0, "clockwise arcs come in even number"
    return clockwise


def orientations_of(w: PMSequence) -> list[tuple[PMSequence, int]]:
    """All sequences whose weight orients the full cup diagram of w,
    with clockwise counts, in enumeration order."""
    c = cup_diagram(w)
    out = []
    for v in enumerate_wp(w.n):
        r = orient(weight_of(v), c)
        if r is not None:
            out.append((v, r))
    return out


def kl_poly_diagrammatic(v: PMSequence, w: PMSequence) -> LaurentPoly:
    """q to half the clockwise count when v orients the diagram of w,
    else zero.  Matches the canonical-basis coefficient; tests compare
    against the recursion."""
    r = orient(weight_of(v), cup_diagram(w))
    if r is None:
        return ZERO
    return LaurentPoly.q_power(r // 2)


def cut_degree(v: Weight, dc: DecoratedCupDiagram) -> Optional[int]:
    """Degree of v on a decorated cup diagram, or None if v does not
    orient it.

    Plain cup: Down-Up is degree 0, Up-Down is degree 1.  Dotted cup:
    Up-Up is 0, Down-Down is 1.  A plain edge forces Down, a dotted edge
    forces Up, both at degree 0.  Agrees with half the clockwise count
    of the full picture."""
    deg = 0
    for i, j, dotted in dc.cups:
        ui, uj = v.up(i), v.up(j)
        if dotted:
            if ui != uj:
                return None
            deg += 0 if ui else 1
        else:
            if ui == uj:
                return None
            deg += 1 if ui else 0
    for p, dotted in dc.edges:
        if v.up(p) != dotted:
            return None
    return deg


def enumerate_decorated(n: int) -> list[DecoratedCupDiagram]:
    """Every valid decorated cup diagram on n points.

    Generated structurally (partial matchings plus decorations filtered
    through the constructor); tests pin this against the image of
    decorated_cup."""
    out: list[DecoratedCupDiagram] = []

    def structures(points: tuple[int, ...]) -> Iterable[tuple[tuple[tuple[int, int], ...], tuple[int, ...]]]:
        # non-crossing partial matchings with unmatched points not enclosed:
        # the first point is an edge, or opens a cup whose inside is fully
        # matched.
        if not points:
            yield (), ()
            return
        first, rest = points[0], points[1:]
        for cups, edges in structures(rest):
            yield cups, (first, *edges)
        for k, second in enumerate(rest):
            inside, outside = rest[:k], rest[k + 1 :]
            for in_cups, in_edges in structures(inside):
                if in_edges:
                    continue
                for out_cups, out_edges in structures(outside):
                    yield ((first, second), *in_cups, *out_cups), out_edges

    for cups, edges in structures(tuple(range(1, n + 1))):
        for cup_dots in range(1 << len(cups)):
            for edge_dots in range(1 << len(edges)):
                try:
                    dc = DecoratedCupDiagram(
                        n,
                        tuple(sorted((i, j, bool(cup_dots >> k & 1)) for k, (i, j) in enumerate(cups))),
                        tuple(sorted((p, bool(edge_dots >> k & 1)) for k, p in enumerate(edges))),
                    )
                except ValueError:
                    continue
                out.append(dc)
    return sorted(out, key=lambda d: (d.cups, d.edges))
