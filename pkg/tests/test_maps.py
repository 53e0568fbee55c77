import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import two_color_partitions
from partition_lab.core import (
    BLUE,
    GREEN,
    ColoredPartition,
    Family,
    Overpartition,
    canonicalize,
    enumerate_family,
    is_triangular,
    member,
    stats,
)
from partition_lab.maps import (
    FixedStaircase,
    MapDomainError,
    ModularDiagram,
    Moved,
    Staircase,
    from_modular_diagram,
    from_overpartition,
    lambda_parts_of,
    modular4_transform,
    pair_merge,
    pair_split,
    paint_colors,
    phi,
    phi_case,
    shape_of,
    staircase,
    strip_colors,
    theta,
    to_modular_diagram,
    to_overpartition,
)
from partition_lab.render import diagram_cells, render_ascii, render_diagram, render_svg

P = ColoredPartition.from_spec

PHI_PAIRS = [
    ("8b,1b", "4b,4b,1b"),
    ("5b,2b,1b,1g", "5b,1b,1b,1b,1g"),
    ("8b,8b,3b,3b,3b,1b,1b,1g", "16b,3b,3b,3b,1b,1b,1g"),
    ("7g,6b,4b,4b,3b,1b,1b", "7g,4b,4b,3b,3b,3b,1b,1b"),
]


@pytest.mark.parametrize("left, right", PHI_PAIRS)
def test_phi_fixture_rows_both_directions(left, right):
    assert phi(P(left)) == P(right)
    assert phi(P(right)) == P(left)


def test_phi_case_labels():
    assert phi_case(P("8b,1b")) == ("2-2-ii/c=4k/split", "split", 8)
    assert phi_case(P("5b,1b,1b,1b,1g")) == ("1", "merge", 1)
    assert phi_case(P("7g,6b,4b,4b,3b,1b,1b"))[0] == "2-1-ii/c=4k+2"


def test_phi_domain():
    with pytest.raises(MapDomainError):
        phi(P("3b,1g"))  # in pi_Q
    with pytest.raises(MapDomainError):
        phi(P("2g"))  # not in pi_F


def test_phi_gap_example():
    # the c = 4k split branch is not undone by the merge branch chosen on the image
    once = phi(P("12b,10b"))
    assert once == P("10b,6b,6b")
    assert phi(once) == P("6b,6b,5b,5b")


def test_phi_contract_holds_exhaustively():
    bad = 0
    for n in range(0, 17):
        for lam in enumerate_family(Family.F, n):
            if member(Family.Q, lam):
                continue
            out = phi(lam)
            assert out.weight == n
            assert member(Family.F, out) and not member(Family.Q, out)
            assert stats(out).n_even_parts % 2 != stats(lam).n_even_parts % 2
            if phi(out) != lam:
                assert phi_case(lam)[0].endswith("c=4k/split")
                bad += 1
    assert bad > 0


def test_overpartition_bijection_example():
    beta = to_overpartition(P("3b,1g,1g"))
    assert beta == Overpartition(((3, True), (1, False), (1, False)))
    assert from_overpartition(beta) == P("3b,1g,1g")
    with pytest.raises(MapDomainError):
        to_overpartition(P("2b"))
    with pytest.raises(MapDomainError):
        from_overpartition(Overpartition(((2, True),)))


@pytest.mark.parametrize("n", range(0, 15))
def test_overpartition_bijection_exhaustive(n):
    src = enumerate_family(Family.Q, n)
    images = [to_overpartition(p) for p in src]
    assert len(set(images)) == len(images) == len(enumerate_family(Family.OVER_ODD, n))
    assert all(from_overpartition(b) == p for b, p in zip(images, src))


@pytest.mark.parametrize("n", range(0, 15))
def test_strip_paint_exhaustive(n):
    src = enumerate_family(Family.R, n)
    images = [strip_colors(p) for p in src]
    assert set(images) == set(enumerate_family(Family.H, n))
    assert len(set(images)) == len(images)
    assert all(paint_colors(m) == p for m, p in zip(images, src))


def test_theta_example():
    a, b = P("5b,4b,3b,2g,2b"), P("5b,4g,3b,2g,2b")
    assert theta(a) == b and theta(b) == a
    with pytest.raises(MapDomainError):
        theta(P("2b,2g,1b"))


def test_theta_exhaustive():
    for n in range(0, 16):
        for lam in enumerate_family(Family.M, n):
            out = theta(lam)
            assert out.weight == n and member(Family.M, out)
            assert theta(out) == lam
            assert (stats(out).n_blue_even_parts - stats(lam).n_blue_even_parts) in (1, -1)


def test_example_chain():
    gamma = P("6g,6b,5b,4g,4b,3b,2g,2b,1b")
    lam = pair_merge(gamma)
    assert lam == ColoredPartition.mono([12, 8, 5, 4, 3, 1])
    d = to_modular_diagram(lam)
    assert d == ModularDiagram((12, 8, 4), (5, 1), (3,))
    moved = modular4_transform(lam)
    assert isinstance(moved, Moved)
    d2 = to_modular_diagram(moved.result)
    assert d2 == ModularDiagram((8, 4), (9, 5), (7,))
    assert pair_split(moved.result) == P("9b,7b,5b,4g,4b,2g,2b")
    assert modular4_transform(moved.result) == Moved(lam)


@pytest.mark.parametrize("n", range(0, 15))
def test_pair_merge_exhaustive(n):
    src = [p for p in enumerate_family(Family.L, n) if not member(Family.M, p)]
    images = [pair_merge(p) for p in src]
    assert set(images) == set(enumerate_family(Family.N, n))
    assert len(set(images)) == len(images)
    assert all(pair_split(m) == p for m, p in zip(images, src))


def test_fixed_points_small():
    assert modular4_transform(ColoredPartition.mono([5, 1])) == FixedStaircase(Staircase.C1, 2)
    assert modular4_transform(ColoredPartition.mono([3])) == FixedStaircase(Staircase.C3, 1)
    assert modular4_transform(ColoredPartition.mono([])) == FixedStaircase(Staircase.C1, 0)
    assert staircase(Staircase.C3, 3) == ColoredPartition.mono([11, 7, 3])


def test_modular4_involution_to_40():
    for n in range(0, 41):
        fixed = []
        for mu in enumerate_family(Family.N, n):
            out = modular4_transform(mu)
            if isinstance(out, FixedStaircase):
                assert staircase(out.kind, out.k) == mu
                fixed.append(out)
                continue
            assert out.result.weight == n and member(Family.N, out.result)
            assert out.result != mu
            assert modular4_transform(out.result) == Moved(mu)
            # the number of even parts changes by exactly one
            assert abs(stats(out.result).n_even_parts - stats(mu).n_even_parts) == 1
        k = is_triangular(n)
        assert len(fixed) == (0 if k is None else 1)
        if k:
            f = fixed[0]
            assert f.k == (k + 1) // 2
            assert f.kind is (Staircase.C1 if k % 2 == 1 else Staircase.C3)
            want = 2 * f.k ** 2 - f.k if f.kind is Staircase.C1 else 2 * f.k ** 2 + f.k
            assert want == n


def test_modular4_domain():
    with pytest.raises(MapDomainError):
        modular4_transform(ColoredPartition.mono([6]))
    with pytest.raises(MapDomainError):
        modular4_transform(ColoredPartition.mono([5, 5]))


n_partitions = st.sets(st.integers(1, 60).filter(lambda v: v % 4 != 2), max_size=8).map(
    ColoredPartition.mono)


@settings(max_examples=300)
@given(n_partitions)
def test_modular4_involution_random(mu):
    out = modular4_transform(mu)
    if isinstance(out, Moved):
        assert modular4_transform(out.result) == Moved(mu)
    else:
        assert staircase(out.kind, out.k) == mu


@settings(max_examples=300)
@given(n_partitions)
def test_shape_round_trip(mu):
    d = to_modular_diagram(mu)
    c1, c3 = lambda_parts_of(shape_of(d))
    assert (c1, c3) == (d.lambda_c1, d.lambda_c3)
    assert from_modular_diagram(d) == mu


def test_modular_diagram_validation():
    with pytest.raises(ValueError):
        ModularDiagram((4, 8))
    with pytest.raises(ValueError):
        ModularDiagram((), (3,))


def test_render_small_example():
    d = ModularDiagram((8, 4), (5, 1), (3,))
    assert render_ascii(d) == "1.\n##13\nλ_e: (8, 4)\n"
    assert render_diagram(d, "ascii") == render_ascii(d)
    with pytest.raises(ValueError):
        render_diagram(d, "png")


def test_render_square_example():
    d = ModularDiagram((12, 8, 4), (17, 13, 9, 5, 1), (19, 15, 11, 7, 3))
    cells = diagram_cells(d)
    assert len(cells) == 25
    assert [cells[(i, i)] for i in range(5)] == ["13"] * 5
    lines = render_ascii(d).splitlines()
    assert lines[:5] == ["13########", "##13######", "####13####", "######13##", "########13"]


def test_render_empty():
    assert render_ascii(ModularDiagram()) == "λ_e: (none)\n"
    assert "<svg" in render_svg(ModularDiagram())


def test_svg_topology():
    d = ModularDiagram((8, 4), (5, 1), (3,))
    svg = render_svg(d)
    cells = diagram_cells(d)
    squares = sum(1 for v in cells.values() if v == "#")
    assert svg.count("<rect") == squares
    assert svg.count('class="tri1"') == sum("1" in v for v in cells.values() if v != "#")
    assert svg.count('class="tri3"') == sum("3" in v for v in cells.values() if v != "#")
    assert svg.count('class="diagonal"') == 1
    assert "λ_e: (8, 4)" in svg


def test_colors_match_brute_force_spec():
    # pair_split output lands in pi_L minus pi_M for every pi_N input
    for n in range(0, 12):
        for mu in enumerate_family(Family.N, n):
            lam = pair_split(mu)
            raw = tuple((p.value, p.color.value) for p in lam.parts)
            assert raw in two_color_partitions(n)
            assert member(Family.L, lam) and not member(Family.M, lam)
