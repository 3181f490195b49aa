"""Exact linking numbers of disjoint closed polygonal loops.

Loops are given as lists of 3D points with Fraction (or int) coordinates.
The linking number is computed from a generic projection: signed crossings
where the first loop passes over the second are summed.  All arithmetic is
exact; if a candidate projection direction is degenerate for the given pair
(a segment parallel to the direction, overlapping collinear images, or a
crossing at a segment endpoint), the next candidate direction is tried.  A
projected crossing at equal depth means the curves genuinely intersect in
3-space and is reported as an error.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import InternalError

Point = tuple[Fraction, Fraction, Fraction]

# Deterministic supply of scruffy projection directions.  The first one that
# is generic for the given pair of loops wins.
_DIRECTIONS = [
    (3, 1009, 17),
    (7, 1999, 29),
    (11, 4001, 53),
    (23, 7919, 101),
    (41, 15131, 211),
    (83, 31337, 431),
    (173, 65537, 887),
    (347, 131071, 1777),
    (691, 262139, 3547),
]


class _DegenerateProjection(Exception):
    pass


def _to_int_loops(loops):
    denom = 1
    for loop in loops:
        for p in loop:
            for c in p:
                d = Fraction(c).denominator
                denom = denom * d // gcd(denom, d)
    return [
        [tuple(int(Fraction(c) * denom) for c in p) for p in loop] for loop in loops
    ]


def _segments(loop):
    segs = []
    m = len(loop)
    for idx in range(m):
        p, q = loop[idx], loop[(idx + 1) % m]
        if p != q:
            segs.append((p, q))
    return segs


def _cross3(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _sub(a, b):
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def _crossings_over(segs_a, segs_b, v) -> int:
    """Signed count of projected crossings where loop A passes over loop B.

    "Over" means larger coordinate along `v` (the viewer looks along -v); the
    projection plane carries the orientation making (u1, u2, v) positive, and
    a crossing counts +1 when (dir_over, dir_under) is a positive frame.
    """
    seed = (1, 0, 0) if (v[1], v[2]) != (0, 0) else (0, 1, 0)
    u1 = _cross3(v, seed)
    u2 = _cross3(v, u1)

    def proj(p):
        return (_dot(p, u1), _dot(p, u2))

    total = 0
    for p1, p2 in segs_a:
        a1, a2 = proj(p1), proj(p2)
        da = (a2[0] - a1[0], a2[1] - a1[1])
        if da == (0, 0):
            raise _DegenerateProjection
        dav = _dot(_sub(p2, p1), v)
        for q1, q2 in segs_b:
            b1, b2 = proj(q1), proj(q2)
            db = (b2[0] - b1[0], b2[1] - b1[1])
            if db == (0, 0):
                raise _DegenerateProjection
            denom = da[0] * db[1] - da[1] * db[0]
            r = (b1[0] - a1[0], b1[1] - a1[1])
            if denom == 0:
                if r[0] * da[1] - r[1] * da[0] == 0:
                    # collinear images; overlap would hide crossings
                    raise _DegenerateProjection
                continue
            crossing_sign = 1 if denom > 0 else -1
            s_num = r[0] * db[1] - r[1] * db[0]
            t_num = r[0] * da[1] - r[1] * da[0]
            if denom < 0:
                denom, s_num, t_num = -denom, -s_num, -t_num
            if not (0 <= s_num <= denom and 0 <= t_num <= denom):
                continue
            if s_num in (0, denom) or t_num in (0, denom):
                raise _DegenerateProjection
            # Depths along v at the intersection point, times denom (> 0).
            depth_a = _dot(p1, v) * denom + s_num * dav
            depth_b = _dot(q1, v) * denom + t_num * _dot(_sub(q2, q1), v)
            if depth_a == depth_b:
                raise InternalError("loops intersect in 3-space; bad geometry")
            if depth_a > depth_b:
                total += crossing_sign
    return total


def linking_number(loop_a: Sequence[Point], loop_b: Sequence[Point]) -> int:
    """lk(A, B) for disjoint closed PL loops, exact."""
    int_a, int_b = _to_int_loops([loop_a, loop_b])
    segs_a, segs_b = _segments(int_a), _segments(int_b)
    for direction in _DIRECTIONS:
        try:
            return _crossings_over(segs_a, segs_b, direction)
        except _DegenerateProjection:
            continue
    raise InternalError("no generic projection direction found for linking number")
