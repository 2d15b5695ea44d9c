import random

import pytest

from rainbowindex import (
    EdgeColoring,
    RoutedToFamilyError,
    SplitSpec,
    cartesian_coloring,
    complete,
    cycle,
    diameter,
    grid_coloring,
    is_complete,
    is_k_rainbow,
    join_coloring,
    lex_coloring_general,
    lex_coloring_h2,
    path,
    rx_exact,
    sdiam3,
    split_coloring,
    star,
    strong_coloring,
    subdivision_coloring,
)

from oracles import random_connected_graph


def solve_coloring(g, k=3):
    return rx_exact(g, k).witness


def test_cartesian_figure_instance():
    report = cartesian_coloring(
        path(4), solve_coloring(path(4)), path(3), solve_coloring(path(3))
    )
    assert report.ok
    assert report.colors_used == 5
    assert report.claimed_bound == 5
    assert sdiam3(report.derived_graph) == 5  # certifies exactness


def test_cartesian_two_edges_make_c4():
    report = cartesian_coloring(
        path(2), EdgeColoring((0,), 1), path(2), EdgeColoring((0,), 1)
    )
    g = report.derived_graph
    assert g.n == 4 and g.m == 4 and all(g.degree(v) == 2 for v in range(4))
    assert report.ok and report.colors_used == 2


def test_cartesian_k1_factor_copies_coloring():
    ch = solve_coloring(cycle(5))
    report = cartesian_coloring(path(1), EdgeColoring((), 0), cycle(5), ch)
    assert report.coloring.colors == ch.colors
    assert report.ok


def test_cartesian_rejects_bad_operand_coloring():
    bad = EdgeColoring((0, 0, 0), 1)  # P_4 needs 3 colors
    with pytest.raises(ValueError, match="not 3-rainbow"):
        cartesian_coloring(path(4), bad, path(3), solve_coloring(path(3)))


def test_grid_colorings():
    for dims, want in [((4, 3), 5), ((2, 2), 2), ((3, 3), 4)]:
        report = grid_coloring(dims)
        assert report.ok
        assert report.colors_used == want
        assert report.claimed_bound == want == report.known_bound
    with pytest.raises(ValueError):
        grid_coloring((1, 3))
    with pytest.raises(ValueError):
        grid_coloring(())


def test_strong_colorings():
    rep = strong_coloring(
        path(2), EdgeColoring((0,), 1), path(2), EdgeColoring((0,), 1)
    )
    assert is_complete(rep.derived_graph) and rep.derived_graph.n == 4
    assert rep.ok and rep.colors_used <= 2
    rep2 = strong_coloring(
        path(3), solve_coloring(path(3)), path(2), EdgeColoring((0,), 1)
    )
    assert rep2.ok and rep2.colors_used <= 3


def test_strong_never_exceeds_cartesian_palette():
    operands = [path(2), path(3), cycle(3), cycle(4)]
    colorings = {g: solve_coloring(g) for g in operands}
    for g in operands:
        for h in operands:
            cart = cartesian_coloring(g, colorings[g], h, colorings[h])
            strong = strong_coloring(g, colorings[g], h, colorings[h])
            assert strong.ok
            assert strong.colors_used <= cart.colors_used


def test_lex_h2():
    rep = lex_coloring_h2(path(3), solve_coloring(path(3)))
    assert rep.ok and rep.colors_used == 3
    rep = lex_coloring_h2(path(4), solve_coloring(path(4)))
    assert rep.ok and rep.colors_used == 4
    with pytest.raises(RoutedToFamilyError):
        lex_coloring_h2(complete(3), solve_coloring(complete(3)))


def test_lex_general():
    rep = lex_coloring_general(
        path(3), solve_coloring(path(3)), path(3), solve_coloring(path(3), k=2)
    )
    assert rep.derived_graph.m == 24
    assert rep.ok and rep.colors_used <= 4
    rep = lex_coloring_general(
        cycle(5), solve_coloring(cycle(5)), complete(3), solve_coloring(complete(3), k=2)
    )
    assert rep.ok and rep.colors_used <= 4


def test_lex_general_validation():
    with pytest.raises(ValueError, match="V\\(H\\)"):
        lex_coloring_general(
            path(3), solve_coloring(path(3)), path(2), EdgeColoring((0,), 1)
        )
    with pytest.raises(RoutedToFamilyError):
        lex_coloring_general(
            complete(3),
            solve_coloring(complete(3)),
            complete(3),
            solve_coloring(complete(3), k=2),
        )
    # slack palette rejected: the rotation rule needs every color present
    slack = EdgeColoring(tuple(solve_coloring(path(3)).colors), 5)
    with pytest.raises(ValueError, match="every color of its palette"):
        lex_coloring_general(
            path(3), slack, path(3), solve_coloring(path(3), k=2)
        )


def test_lex_equality_class_certified():
    # diam(G) = rx3(G) and complete H force index rx3(G) + 1 exactly
    for g in (path(3), path(4), cycle(4)):
        rx3_g = rx_exact(g, 3).value
        assert diameter(g) == rx3_g
        rep_k2 = lex_coloring_h2(g, solve_coloring(g))
        assert rep_k2.ok and rep_k2.colors_used <= rx3_g + 1
        assert sdiam3(rep_k2.derived_graph) >= diameter(g) + 1
        if g.n == 4 and g.m == 3:  # solve one instance end to end as well
            assert rx_exact(rep_k2.derived_graph, 3).value == rx3_g + 1
        rep_k3 = lex_coloring_general(
            g, solve_coloring(g), complete(3), solve_coloring(complete(3), k=2)
        )
        assert rep_k3.ok and rep_k3.colors_used <= rx3_g + 1
        assert sdiam3(rep_k3.derived_graph) >= diameter(g) + 1


def test_join_single_vertex():
    rep = join_coloring(path(1), path(4), ch=solve_coloring(path(4)))
    assert rep.ok and rep.colors_used == 4


def test_join_two_vertices():
    rep = join_coloring(path(2), path(4), ch_rc=solve_coloring(path(4), k=2))
    assert rep.ok
    assert rep.colors_used == 6  # rc(P_4) + 3
    assert rep.claimed_bound == 6
    assert rep.known_bound == 3  # the two-side bipartite value undercuts it


def test_join_three_plus_exact():
    rep = join_coloring(
        path(3), path(3), cg=solve_coloring(path(3)), ch=solve_coloring(path(3))
    )
    assert rep.ok
    assert rep.claimed_bound == 3  # max(2, 2) + 1
    assert rep.known_bound == 3
    assert rx_exact(rep.derived_graph, 3).value == 3


def test_join_validation():
    with pytest.raises(RoutedToFamilyError):
        join_coloring(complete(2), complete(3))
    with pytest.raises(ValueError, match="smaller operand"):
        join_coloring(path(4), path(3))
    with pytest.raises(ValueError, match="needs ch"):
        join_coloring(path(1), path(4))
    with pytest.raises(ValueError, match="ch_rc"):
        join_coloring(path(2), path(4))
    with pytest.raises(ValueError, match="connected"):
        join_coloring(
            path(1),
            path(4).__class__(4, ((0, 1), (2, 3))),
            ch=EdgeColoring((0, 1), 2),
        )


def test_split_colorings():
    # splitting a degree-2 vertex of C_4 into singleton sides gives C_5
    c4 = cycle(4)
    rep = split_coloring(
        c4, solve_coloring(c4), SplitSpec(1, frozenset({0}), frozenset({2}))
    )
    g5 = rep.derived_graph
    assert g5.n == 5 and g5.m == 5 and all(g5.degree(v) == 2 for v in range(5))
    assert rep.ok and rep.colors_used == 3
    assert rx_exact(g5, 3).value == 3  # tight

    rep = split_coloring(
        path(4),
        solve_coloring(path(4)),
        SplitSpec(0, frozenset({1}), frozenset()),
    )
    assert rep.ok and rep.colors_used == 4

    k4 = complete(4)
    rep = split_coloring(
        k4, solve_coloring(k4), SplitSpec(0, frozenset({1}), frozenset({2, 3}))
    )
    assert rep.ok and rep.colors_used <= 3


def test_split_invalid_spec():
    with pytest.raises(ValueError):
        split_coloring(
            cycle(4),
            solve_coloring(cycle(4)),
            SplitSpec(1, frozenset({0}), frozenset()),
        )


def test_subdivision_colorings():
    rep = subdivision_coloring(path(2), EdgeColoring((0,), 1), 0)
    assert rep.derived_graph.m == 2 and rep.ok and rep.colors_used == 2
    rep = subdivision_coloring(cycle(4), solve_coloring(cycle(4)), 0)
    assert rep.ok and rep.colors_used == 3
    assert rx_exact(rep.derived_graph, 3).value == 3  # tight
    rep = subdivision_coloring(path(4), solve_coloring(path(4)), 1)
    assert rep.ok and rep.colors_used == 4
    assert rx_exact(rep.derived_graph, 3).value == 4  # tight
    with pytest.raises(ValueError):
        subdivision_coloring(path(3), solve_coloring(path(3)), 9)


def test_palette_arithmetic_random_batch():
    rng = random.Random(97)
    for _ in range(10):
        g = random_connected_graph(rng, rng.randrange(2, 5), rng.randrange(2))
        h = random_connected_graph(rng, rng.randrange(2, 5), rng.randrange(2))
        cg, ch = solve_coloring(g), solve_coloring(h)
        for rep in (cartesian_coloring(g, cg, h, ch), strong_coloring(g, cg, h, ch)):
            assert rep.ok
            assert rep.colors_used <= rep.claimed_bound
        v = rng.randrange(g.n)
        nbhd = list(g.neighbors(v))
        rng.shuffle(nbhd)
        cut = rng.randrange(len(nbhd) + 1)
        rep = split_coloring(
            g, cg, SplitSpec(v, frozenset(nbhd[:cut]), frozenset(nbhd[cut:]))
        )
        assert rep.ok and rep.colors_used <= rep.claimed_bound
        rep = subdivision_coloring(g, cg, rng.randrange(g.m))
        assert rep.ok and rep.colors_used <= rep.claimed_bound


def test_equality_class_for_steiner_tight_operands():
    # operands whose index equals their Steiner diameter certify the
    # product's index as the palette sum
    operands = [path(3), path(4), cycle(4), cycle(6), star(4)]
    for g in operands:
        for h in operands:
            rg, rh = rx_exact(g, 3), rx_exact(h, 3)
            if rg.value != sdiam3(g) or rh.value != sdiam3(h):
                continue
            rep = cartesian_coloring(g, rg.witness, h, rh.witness)
            assert rep.ok
            assert sdiam3(rep.derived_graph) == rg.value + rh.value
            assert rep.colors_used <= rg.value + rh.value
