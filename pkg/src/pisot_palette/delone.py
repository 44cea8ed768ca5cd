"""Local Delone data: the dual face at each Voronoi vertex and Delta*."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .field import ZERO, BaseSpec, QBeta, ZGamma, canonical_key, sort_exact
from .voronoi import Protocell, vertex_point


@dataclass(frozen=True)
class DualFace:
    """Delone tile around one Voronoi vertex of a protocell.

    ``vertex`` is the merged vertex key (incident points, origin first) and
    ``cycle`` lists the same points counter-clockwise around the circumcenter.
    """

    vertex: tuple[ZGamma, ...]
    cycle: tuple[ZGamma, ...]

    def edges(self):
        n = len(self.cycle)
        return [(self.cycle[k], self.cycle[(k + 1) % n]) for k in range(n)]

    def translated_key(self) -> tuple:
        """Point set moved so its canonically smallest point sits at 0."""
        lo = min(self.cycle, key=canonical_key)
        return tuple(sorted((z - lo for z in self.cycle), key=canonical_key))


def on_circle_sign(xi, xj, w, base: BaseSpec) -> int:
    """Sign of |w - v|^2 - |v|^2 for v the circumcenter of 0, xi, xj; zero means w lies on the circle."""
    t_ij = base.t_form(xi, xj)
    d = (xi[0] - xj[0], xi[1] - xj[1], xi[2] - xj[2])
    lhs = base.t_form(base.zg_mul(d, w), base.zg_mul(xi, xj))
    rhs = base.zb_mul(t_ij, base.p_form(w, w))
    val = tuple(r - 2 * l for l, r in zip(lhs, rhs))
    return base.sign_int(val) * base.sign_int(t_ij)


def delone_faces(protocell: Protocell, base: BaseSpec) -> list[DualFace]:
    """One face per merged vertex; four cocircular points give one quadrilateral."""
    faces = []
    for v in protocell.vertices:
        center = vertex_point(v.pair[0], v.pair[1], base)
        pts = (ZERO,) + tuple(v.incident)
        for w in v.incident:
            if w in v.pair:
                continue
            if on_circle_sign(v.pair[0], v.pair[1], w, base) != 0:
                raise AssertionError(f"{tuple(w)} is not on the vertex circle")
        ang = [cmath.phase(base.to_complex(z) - center) for z in pts]
        order = sorted(range(len(pts)), key=lambda k: ang[k])
        for a, b in zip(order, order[1:]):
            if math.isclose(ang[a], ang[b], abs_tol=1e-12):
                raise AssertionError("two face points share a direction from the center")
        faces.append(DualFace(pts, tuple(pts[k] for k in order)))
    return faces


def edge_lengths_sq(face: DualFace, base: BaseSpec) -> list[QBeta]:
    out = []
    for p, q in face.edges():
        d = p - q
        out.append(QBeta.of(*base.p_form(d, d)) / 2)
    return sort_exact(out, base)


def face_shape_key(face: DualFace, base: BaseSpec) -> tuple:
    """Sorted exact edge lengths squared; equal for congruent faces."""
    return tuple(edge_lengths_sq(face, base))


def delta_star_sq(protocell: Protocell) -> QBeta:
    """Largest squared distance from the cell's point to a Voronoi neighbour."""
    return protocell.delta_star_sq


def angle_sum_at_origin(protocell: Protocell, base: BaseSpec) -> float:
    """Sum of the face angles at 0; equals 2*pi when the faces close up around the point."""
    total = 0.0
    for f in delone_faces(protocell, base):
        k = f.cycle.index(ZERO)
        n = len(f.cycle)
        prev = base.to_complex(f.cycle[(k - 1) % n])
        nxt = base.to_complex(f.cycle[(k + 1) % n])
        ang = cmath.phase(prev / nxt)
        total += ang if ang > 0 else ang + 2 * math.pi
    return total


def palette_faces(cells, base: BaseSpec) -> dict[tuple, DualFace]:
    """All distinct faces of a palette up to translation."""
    out: dict[tuple, DualFace] = {}
    for cell in cells:
        for f in delone_faces(cell, base):
            out.setdefault(f.translated_key(), f)
    return out
