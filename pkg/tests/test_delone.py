import math

import pytest

from pisot_palette.cutproject import Window
from pisot_palette.delone import (
    angle_sum_at_origin, delone_faces, delta_star_sq, face_shape_key, on_circle_sign, palette_faces,
)
from pisot_palette.field import QBeta, ZERO, make_base
from pisot_palette.voronoi import Patch, certified_palette_run, palette, protocell_from_patch


@pytest.fixture(scope="module")
def x2(tribo):
    return palette(Window(QBeta.of(1, 0, 1)), tribo)


def test_one_face_per_vertex(tribo, x2):
    for cell in x2:
        faces = delone_faces(cell, tribo)
        assert len(faces) == len(cell.vertices)
        for f in faces:
            assert len(f.cycle) >= 3 and ZERO in f.cycle
            a, b = f.cycle[1], f.cycle[2]
            for w in f.cycle:
                if w not in (ZERO, a, b):
                    assert on_circle_sign(a, b, w, tribo) == 0


def test_quadrilateral_exists(tribo, x2):
    sizes = [len(f.cycle) for c in x2 for f in delone_faces(c, tribo)]
    assert 4 in sizes and max(sizes) == 4


def test_tile_shapes(tribo, x2):
    faces = palette_faces(x2, tribo)
    assert len(faces) == 6
    shapes = {face_shape_key(f, tribo) for f in faces.values()}
    # each shape appears together with its half-turn
    assert len(shapes) == 3


def test_hexagon_faces_are_triangles(tribo):
    pts = [(1, 0, 0), (1, 1, 1), (2, 2, 1)]
    pts = pts + [tuple(-x for x in z) for z in pts]
    cell = protocell_from_patch(Patch(tuple(pts)), tribo)
    assert all(len(f.cycle) == 3 for f in delone_faces(cell, tribo))


def test_delta_star_values(tribo, x2):
    assert qmax(tribo, [delta_star_sq(p) for p in x2]) == tribo.beta_pow(1)
    for p in x2:
        if p.delta_sq == tribo.beta_pow(-2):
            assert delta_star_sq(p) == QBeta.of(1)
    first = next(p for p in x2 if set(p.neighbors) == {(1, 0, 0), (2, 1, 1), (1, 1, 1), (2, 2, 1)})
    norms = [QBeta.of(*tribo.p_form(z, z)) / 2 for z in first.neighbors]
    assert delta_star_sq(first) == qmax(tribo, norms) == QBeta.of(1)


def qmax(base, xs):
    return max(xs, key=base.approx)


@pytest.mark.parametrize("a,b", [(1, 1), (2, 0), (3, -1)])
def test_faces_close_around_origin(a, b):
    base = make_base(a, b)
    for cell in certified_palette_run(Window(base.beta_pow(2) + QBeta.of(1)), base).palette:
        assert abs(angle_sum_at_origin(cell, base) - 2 * math.pi) < 1e-9
        assert base.cmp(cell.delta_sq, cell.delta_star_sq) <= 0
        assert base.cmp(cell.delta_star_sq, cell.Delta_sq) <= 0
