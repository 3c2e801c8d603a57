import itertools

import pytest

from cupkl.laurent import ONE, Q, ZERO
from cupkl.weyl import PMSequence, enumerate_wp
from cupkl.cups import (
    DecoratedCupDiagram,
    Weight,
    _label_up,
    cup_diagram,
    cut,
    cut_degree,
    decorated_cup,
    enumerate_decorated,
    kl_poly_diagrammatic,
    matching,
    orient,
    orientations_of,
    weight_of,
)
from cupkl.hecke import kl_table


def test_decorated_table_n4():
    want = {
        "++++": ((), ((1, False), (2, False), (3, False), (4, False))),
        "--++": (((1, 2, True),), ((3, False), (4, False))),
        "-+-+": (((2, 3, False),), ((1, True), (4, False))),
        "+--+": (((1, 2, False),), ((3, True), (4, False))),
        "-++-": (((3, 4, False),), ((1, True), (2, False))),
        "+-+-": (((1, 2, False), (3, 4, False)), ()),
        "++--": (((1, 4, False), (2, 3, False)), ()),
        "----": (((1, 2, True), (3, 4, True)), ()),
    }
    for s, (cups_, edges) in want.items():
        d = decorated_cup(PMSequence(s))
        assert (d.cups, d.edges) == (cups_, edges), s


def test_cutting_the_full_diagram_equals_the_direct_construction():
    for n in range(1, 8):
        for w in enumerate_wp(n):
            assert cut(cup_diagram(w)) == decorated_cup(w)


def test_orientation_polynomials_match_the_recursion():
    for n in range(1, 6):
        t = kl_table(n)
        for w in enumerate_wp(n):
            for v in enumerate_wp(n):
                assert kl_poly_diagrammatic(v, w) == t.poly(v, w)


def test_orientations_example():
    got = [(str(v), cl) for v, cl in orientations_of(PMSequence("-+-+"))]
    assert got == [("-+-+", 0), ("--++", 2)]


def test_clockwise_counts_are_even():
    for n in range(1, 7):
        for w in enumerate_wp(n):
            for _, cl in orientations_of(w):
                assert cl % 2 == 0


def test_diagram_orients_its_own_weight_flat():
    for n in range(1, 7):
        for w in enumerate_wp(n):
            assert orient(weight_of(w), cup_diagram(w)) == 0


def test_enumeration_is_exactly_the_image():
    for n in range(1, 8):
        image = {decorated_cup(w) for w in enumerate_wp(n)}
        listed = enumerate_decorated(n)
        assert len(listed) == len(set(listed))
        assert set(listed) == image


def test_cut_degree_is_half_the_clockwise_count():
    for n in range(1, 7):
        for w in enumerate_wp(n):
            full = cup_diagram(w)
            dec = decorated_cup(w)
            for v in enumerate_wp(n):
                cl = orient(weight_of(v), full)
                deg = cut_degree(weight_of(v), dec)
                if cl is None:
                    assert deg is None
                else:
                    assert deg == cl // 2


def test_matching_is_antisymmetric():
    for n in range(1, 7):
        for w in enumerate_wp(n):
            p = cup_diagram(w).partner()
            for a, b in p.items():
                assert p[-a] == -b


def test_crossings_happen_only_inside_linked_pairs():
    def crosses(x, y):
        (a, b), (c, d) = sorted([x, y])
        return a < c < b < d

    for n in range(1, 7):
        for w in enumerate_wp(n):
            c = cup_diagram(w)
            crossing = {
                frozenset({x, y})
                for x, y in itertools.combinations(c.arcs, 2)
                if crosses(x, y)
            }
            assert crossing == c.linked_pairs


def test_weight_labels():
    n = 4
    for core in map("".join, itertools.product("+-", repeat=n)):
        for p in range(1, 2 * n + 1):
            assert _label_up(core, p) != _label_up(core, -p)
        for p in range(n + 1, 2 * n + 1):
            assert _label_up(core, p)
            assert not _label_up(core, -p)
        for p in range(1, n + 1):
            assert _label_up(core, p) == (core[p - 1] == "-")


def test_weight_validation():
    with pytest.raises(ValueError):
        Weight("+-")
    assert weight_of(PMSequence("--++")).core == "--++"


def test_json_round_trip():
    for n in range(1, 7):
        for w in enumerate_wp(n):
            d = decorated_cup(w)
            assert DecoratedCupDiagram.from_json(d.to_json()) == d


def test_ascii_renders():
    assert decorated_cup(PMSequence("--++")).to_ascii() == "1 2 3 4\n(*) | |"
    assert decorated_cup(PMSequence("-+-+")).to_ascii() == "1 2 3 4\n|*( ) |"
    assert decorated_cup(PMSequence("----")).to_ascii() == "1 2 3 4\n(*) (*)"
    assert decorated_cup(PMSequence("++++")).to_ascii() == "1 2 3 4\n| | | |"


def test_constructor_rejects_crossing_cups():
    with pytest.raises(ValueError):
        DecoratedCupDiagram(4, ((1, 3, False), (2, 4, False)), ())


def test_constructor_rejects_missing_points():
    with pytest.raises(ValueError):
        DecoratedCupDiagram(4, ((1, 2, False),), ((3, False),))


def test_constructor_rejects_edge_under_cup():
    with pytest.raises(ValueError):
        DecoratedCupDiagram(4, ((1, 3, False),), ((2, False), (4, False)))


def test_constructor_rejects_nested_dotted_cup():
    with pytest.raises(ValueError):
        DecoratedCupDiagram(
            6, ((1, 6, False), (2, 3, True), (4, 5, False)), ()
        )


def test_constructor_rejects_dotted_cup_behind_an_edge():
    with pytest.raises(ValueError):
        DecoratedCupDiagram(5, ((2, 3, True),), ((1, False), (4, False), (5, False)))
    DecoratedCupDiagram(5, ((1, 2, True),), ((3, False), (4, False), (5, False)))


def test_constructor_rejects_second_dotted_edge():
    with pytest.raises(ValueError):
        DecoratedCupDiagram(
            4, (), ((1, True), (2, True), (3, False), (4, False))
        )


def test_constructor_rejects_dotted_edge_not_leftmost():
    with pytest.raises(ValueError):
        DecoratedCupDiagram(5, ((1, 2, False),), ((3, False), (4, True), (5, False)))
    DecoratedCupDiagram(5, ((1, 2, False),), ((3, True), (4, False), (5, False)))


def test_constructor_rejects_odd_parity():
    # a lone plain cup cannot appear with no dotted edge
    with pytest.raises(ValueError):
        DecoratedCupDiagram(4, ((1, 2, False),), ((3, False), (4, False)))
