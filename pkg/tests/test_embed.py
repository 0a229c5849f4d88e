import pytest
from hypothesis import given, strategies as st

from amicable_lattice.exact import ContractError, DomainError, isqrt
from amicable_lattice.embed import (
    LatticeEmbedding,
    LatticePoint as P,
    assemble_parallelogram,
    circle_points,
    embed_triangle,
    realize_amicable_pair,
    shoelace_area2,
)
from amicable_lattice.parallelogram import amicable_condition


@pytest.mark.parametrize("pts, area2", [
    ([(0, 0), (4, 0), (4, 4), (0, 4)], 32),
    ([(0, 0), (3, 4), (-2, 4), (-5, 0)], 40),
    ([(0, 0), (1, 0), (2, 0)], 0),
])
def test_shoelace(pts, area2):
    assert shoelace_area2(pts) == area2


def test_shoelace_needs_three_points():
    with pytest.raises(DomainError):
        shoelace_area2([(0, 0), (1, 1)])


def test_square_triangle():
    tri = embed_triangle(16, 16, 32, 8)
    assert tri.vertices == (P(0, 0), P(4, 0), P(0, 4))
    assert tri.verify()


def test_rhombus_triangle():
    tri = embed_triangle(25, 25, 80, 10)
    o, u, p = tri.vertices
    assert o == (0, 0) and u.norm2() == 25 and p.norm2() == 25 and (p - u).norm2() == 80
    assert shoelace_area2(tri.vertices) == 20
    assert tri.verify()


def test_unit_equilateral_is_rejected():
    with pytest.raises(DomainError):
        embed_triangle(1, 1, 1, 1)


def test_assemble_parallelogram_examples():
    tri = LatticeEmbedding((P(0, 0), P(3, 4), P(-5, 0)), (25, 80, 25), 20)
    assert tri.verify()
    par = assemble_parallelogram(tri)
    assert par.vertices == (P(0, 0), P(3, 4), P(-2, 4), P(-5, 0))
    assert par.target_area2 == 40 and par.verify()

    par = assemble_parallelogram(embed_triangle(16, 16, 32, 8))
    assert par.vertices == (P(0, 0), P(4, 0), P(4, 4), P(0, 4))


def test_assemble_rejects_collinear():
    tri = LatticeEmbedding((P(0, 0), P(1, 0), P(2, 0)), (1, 1, 4), 0)
    with pytest.raises(DomainError):
        assemble_parallelogram(tri)


def test_realize_known_pairs():
    sq1, sq2 = realize_amicable_pair(amicable_condition(4, 4, 4, 4))
    assert sq1.vertices == (P(0, 0), P(4, 0), P(4, 4), P(0, 4)) == sq2.vertices
    r1, r2 = realize_amicable_pair(amicable_condition(5, 5, 5, 5))
    assert r1.target_area2 == 40 and r1.verify() and r2.verify()
    assert r1.target_sq_sides == (25, 25, 25, 25)


def test_circle_points():
    assert circle_points(25) == [P(5, 0), P(4, 3), P(3, 4)]
    assert circle_points(3) == []


def _brute_embeddable(x2, y2, d2, area):
    """Search every U, P in the box directly."""
    ru, rp = isqrt(x2), isqrt(y2)
    for ux in range(-ru, ru + 1):
        for uy in range(-ru, ru + 1):
            if ux * ux + uy * uy != x2:
                continue
            for px in range(-rp, rp + 1):
                for py in range(-rp, rp + 1):
                    if (px * px + py * py == y2 and (px - ux) ** 2 + (py - uy) ** 2 == d2
                            and abs(ux * py - uy * px) == 2 * area):
                        return True
    return False


def test_embedding_agrees_with_brute_search():
    tried = 0
    for x2 in range(1, 41):
        for y2 in range(x2, 41):
            for d2 in range(1, 2 * (x2 + y2)):
                t = x2 + y2 - d2
                sixteen_a2 = 4 * x2 * y2 - t * t
                if sixteen_a2 <= 0 or sixteen_a2 % 16:
                    continue
                area = isqrt(sixteen_a2 // 16)
                if 16 * area * area != sixteen_a2:
                    continue
                tried += 1
                expected = _brute_embeddable(x2, y2, d2, area)
                if expected:
                    assert embed_triangle(x2, y2, d2, area).verify()
                else:
                    with pytest.raises(ContractError):
                        embed_triangle(x2, y2, d2, area)
    assert tried > 50


coord = st.integers(min_value=-12, max_value=12)


@given(coord, coord, coord, coord)
def test_every_lattice_triangle_reembeds(ux, uy, px, py):
    cross = ux * py - uy * px
    if cross == 0 or cross % 2:
        return  # integer area only
    u, p = P(ux, uy), P(px, py)
    tri = embed_triangle(u.norm2(), p.norm2(), (p - u).norm2(), abs(cross) // 2)
    assert tri.verify()
    assert shoelace_area2(tri.vertices) > 0
    assert tri.vertices[1].px > 0 and tri.vertices[1].py >= 0


def test_embedding_is_deterministic():
    a = [realize_amicable_pair(amicable_condition(2, 10, 5, 5)) for _ in range(3)]
    assert a[0] == a[1] == a[2]
