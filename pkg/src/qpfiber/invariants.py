"""Independent link-invariant oracles.

Two routes to the Alexander polynomial are kept deliberately separate so
they can cross-check each other:

* reduced Burau matrices of the braid word, with
  ``det(rho(w) - I) / (1 + t + ... + t^(n-1))``;
* an integer Seifert matrix of the braided surface, with ``det(V - tV^T)``.

The Seifert matrix is computed from honest geometry: basis cycles of the
surface's handle graph are laid out as explicit piecewise-linear loops in
3-space (disks in the planes x = s, bands dipping to y < 0 with the
transverse order through a band reversed by its half-twist), the positive
pushoff displaces a loop along the surface normal field (+x on the disks,
rotating through the band twists), and entries are exact linking numbers of
the pushed-off loop with the other basis loops.  The handedness of a
positive half-twist is the one calibration point; it is pinned by the
positive Hopf band having Seifert matrix [-1].

Burau convention: letters act left to right, matching the permutation
convention; the generator matrices are the standard reduced ones with
sigma_i mapping to the identity apart from the block
[[1, t, 0], [0, -t, 0], [0, 1, 1]] on rows i-1, i, i+1 (truncated at the
edges), so det(rho(sigma_i)) = -t.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._linking import linking_number
from .braidcore import BandRepresentation, BraidWord, beta
from .errors import InvalidParameter, NonExactDivision


# ---------------------------------------------------------------------------
# Exact integer Laurent polynomials


class LaurentPolynomial:
    """An element of Z[t, t^-1], stored as a sparse exponent -> coefficient map."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for e, c in dict(coeffs).items():
                if c:
                    clean[int(e)] = int(c)
        self.coeffs = clean

    @staticmethod
    def zero() -> "LaurentPolynomial":
        return LaurentPolynomial()

    @staticmethod
    def one() -> "LaurentPolynomial":
        return LaurentPolynomial({0: 1})

    @staticmethod
    def constant(c: int) -> "LaurentPolynomial":
        return LaurentPolynomial({0: c})

    @staticmethod
    def t_power(e: int, c: int = 1) -> "LaurentPolynomial":
        return LaurentPolynomial({e: c})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, LaurentPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out)

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial({e: c * other for e, c in self.coeffs.items()})
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def min_exp(self) -> int:
        return min(self.coeffs) if self.coeffs else 0

    def max_exp(self) -> int:
        return max(self.coeffs) if self.coeffs else 0

    def shift(self, e: int) -> "LaurentPolynomial":
        return LaurentPolynomial({k + e: c for k, c in self.coeffs.items()})

    def evaluate(self, value: Fraction) -> Fraction:
        return sum((Fraction(c) * Fraction(value) ** e for e, c in self.coeffs.items()), Fraction(0))

    def canonical(self) -> "LaurentPolynomial":
        """Unit-normalized form: lowest exponent 0, lowest coefficient > 0."""
        if not self.coeffs:
            return LaurentPolynomial()
        shifted = self.shift(-self.min_exp())
        if shifted.coeffs[0] < 0:
            shifted = -shifted
        return shifted

    def exact_div(self, divisor: "LaurentPolynomial") -> "LaurentPolynomial":
        """Exact division in Z[t, t^-1]; raises NonExactDivision otherwise."""
        if divisor.is_zero():
            raise NonExactDivision("division by zero polynomial")
        if self.is_zero():
            return LaurentPolynomial()
        num = dict(self.shift(-self.min_exp()).coeffs)
        den = divisor.shift(-divisor.min_exp()).coeffs
        den_deg = max(den)
        den_lead = den[den_deg]
        quot: dict[int, int] = {}
        while num:
            deg = max(num)
            if deg < den_deg:
                raise NonExactDivision("remainder left by polynomial division")
            lead = num[deg]
            if lead % den_lead:
                raise NonExactDivision("leading coefficient does not divide")
            q = lead // den_lead
            qe = deg - den_deg
            quot[qe] = q
            for e, c in den.items():
                ne = e + qe
                num[ne] = num.get(ne, 0) - q * c
                if num[ne] == 0:
                    del num[ne]
        shift_back = self.min_exp() - divisor.min_exp()
        return LaurentPolynomial(quot).shift(shift_back)

    def coefficient_list(self) -> list[int]:
        """Dense coefficients of the canonical form, constant term first."""
        canon = self.canonical()
        if canon.is_zero():
            return [0]
        top = canon.max_exp()
        return [canon.coeffs.get(e, 0) for e in range(top + 1)]

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            term = f"{c}" if e == 0 else (f"{c}*t^{e}" if e != 1 else f"{c}*t")
            parts.append(term)
        return " + ".join(parts).replace("+ -", "- ")


def eq_up_to_units(p: LaurentPolynomial, q: LaurentPolynomial) -> bool:
    """True iff p = +-t^j q."""
    return p.canonical() == q.canonical()


# ---------------------------------------------------------------------------
# Matrices over Z[t, t^-1]

Matrix = tuple[tuple[LaurentPolynomial, ...], ...]


def identity_matrix(n: int) -> Matrix:
    one, zero = LaurentPolynomial.one(), LaurentPolynomial.zero()
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, m, p = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = LaurentPolynomial.zero()
            for k in range(m):
                if a[i][k] and b[k][j]:
                    acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_det(matrix: Matrix) -> LaurentPolynomial:
    """Fraction-free Bareiss determinant over Z[t, t^-1]."""
    n = len(matrix)
    if n == 0:
        return LaurentPolynomial.one()
    m = [list(row) for row in matrix]
    sign = 1
    prev = LaurentPolynomial.one()
    for k in range(n - 1):
        if m[k][k].is_zero():
            pivot_row = next((r for r in range(k + 1, n) if not m[r][k].is_zero()), None)
            if pivot_row is None:
                return LaurentPolynomial.zero()
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num.exact_div(prev)
            m[i][k] = LaurentPolynomial.zero()
        prev = m[k][k]
    result = m[n - 1][n - 1]
    return result if sign == 1 else -result


# ---------------------------------------------------------------------------
# Reduced Burau and the braid route to Alexander


def _burau_generator(n: int, i: int, sign: int) -> Matrix:
    t = LaurentPolynomial.t_power(1)
    mt = LaurentPolynomial.t_power(1, -1)  # -t
    one = LaurentPolynomial.one()
    tinv = LaurentPolynomial.t_power(-1)
    mtinv = LaurentPolynomial.t_power(-1, -1)
    size = n - 1
    rows = [[LaurentPolynomial.one() if r == c else LaurentPolynomial.zero() for c in range(size)] for r in range(size)]
    # 1-based generator index i acts on rows/cols i-1, i, i+1 (1-based),
    # i.e. indices i-2, i-1, i (0-based), truncated at the matrix edge.
    r = i - 1  # 0-based diagonal position of the generator
    if sign == 1:
        if r - 1 >= 0:
            rows[r - 1][r] = t
        rows[r][r] = mt
        if r + 1 < size:
            rows[r + 1][r] = one
    else:
        if r - 1 >= 0:
            rows[r - 1][r] = one
        rows[r][r] = mtinv
        if r + 1 < size:
            rows[r + 1][r] = tinv
    return tuple(tuple(row) for row in rows)


def reduced_burau(word: BraidWord) -> Matrix:
    """Image of the word under the reduced Burau representation.

    Letters multiply left to right: rho(w1 w2) = rho(w1) rho(w2).
    """
    if word.strands < 2:
        raise InvalidParameter("reduced Burau needs at least 2 strands")
    out = identity_matrix(word.strands - 1)
    for i, sign in word.letters:
        out = mat_mul(out, _burau_generator(word.strands, i, sign))
    return out


def alexander_from_braid(word: BraidWord) -> LaurentPolynomial:
    """Alexander polynomial of the closure, canonical up to units."""
    n = word.strands
    if n == 1:
        return LaurentPolynomial.one()
    rho = reduced_burau(word)
    size = n - 1
    diff = tuple(
        tuple(rho[i][j] - (LaurentPolynomial.one() if i == j else LaurentPolynomial.zero()) for j in range(size))
        for i in range(size)
    )
    det = mat_det(diff)
    cyclotomic_like = LaurentPolynomial({e: 1 for e in range(n)})
    return det.exact_div(cyclotomic_like).canonical()


# ---------------------------------------------------------------------------
# Seifert matrices of braided surfaces


@dataclass(frozen=True)
class SeifertMatrix:
    """Integer Seifert matrix on the fundamental cycles of the handle graph."""

    entries: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)


def _spanning_tree(rep: BandRepresentation):
    """Tree band positions (0-based) plus tree adjacency, by band height."""
    parent = list(range(rep.strands + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    tree: set[int] = set()
    adjacency: dict[int, list[tuple[int, int]]] = {s: [] for s in range(1, rep.strands + 1)}
    for pos, band in enumerate(rep.bands):
        ri, rj = find(band.i), find(band.j)
        if ri != rj:
            parent[ri] = rj
            tree.add(pos)
            adjacency[band.i].append((pos, band.j))
            adjacency[band.j].append((pos, band.i))
    return tree, adjacency


def _tree_path(adjacency, start: int, goal: int):
    """List of (band_pos, from_disk, to_disk) along the tree from start to goal."""
    prev: dict[int, tuple[int, int]] = {start: (-1, -1)}
    queue = [start]
    while queue:
        disk = queue.pop(0)
        if disk == goal:
            break
        for pos, other in adjacency[disk]:
            if other not in prev:
                prev[other] = (pos, disk)
                queue.append(other)
    path = []
    disk = goal
    while disk != start:
        pos, before = prev[disk]
        path.append((pos, before, disk))
        disk = before
    path.reverse()
    return path


def _basis_cycles(rep: BandRepresentation):
    """One cycle per co-tree band: ordered (band_pos, direction) traversals.

    direction +1 means the traversal runs from disk i to disk j of the band.
    """
    tree, adjacency = _spanning_tree(rep)
    cycles = []
    for pos, band in enumerate(rep.bands):
        if pos in tree:
            continue
        traversals = [(pos, 1)]
        for tpos, from_disk, to_disk in _tree_path(adjacency, band.j, band.i):
            tband = rep.bands[tpos]
            direction = 1 if (from_disk, to_disk) == (tband.i, tband.j) else -1
            traversals.append((tpos, direction))
        cycles.append(traversals)
    return cycles


# Geometry scales for the PL model; kept tiny relative to the unit spacing
# of disks and band heights.
_DELTA = Fraction(1, 256)
_ETA = Fraction(1, 4096)
# Handedness of a positive half-twist (which parallel strip passes in front,
# and which way the surface normal rotates along the band).  Pinned by the
# positive Hopf band: Seifert matrix [-1].
_TWIST = -1


def _band_geometry(rep, slot_map, pos, cycle_index):
    band = rep.bands[pos]
    slots = slot_map[pos]
    count = len(slots)
    p = slots.index(cycle_index)
    height = pos + 1
    z_i = Fraction(height - 1) + Fraction(p + 1, count + 1)
    z_j = Fraction(height - 1) + Fraction(count - p, count + 1)
    w = 2 * p - (count - 1)
    mid_x = Fraction(band.i + band.j, 2)
    mid_y = Fraction(-1) - _TWIST * band.sign * w * _ETA
    mid_z = (z_i + z_j) / 2
    return band, z_i, z_j, (mid_x, mid_y, mid_z)


def _cycle_loops(rep, slot_map, traversals, cycle_index, corridor_y):
    """Core loop and its positive pushoff, as explicit PL point lists."""
    core = []
    push = []
    for pos, direction in traversals:
        band, z_i, z_j, mid = _band_geometry(rep, slot_map, pos, cycle_index)
        mid_push = (mid[0], mid[1], mid[2] + _TWIST * band.sign * _DELTA)
        if direction == 1:
            x_from, x_to = band.i, band.j
            z_from, z_to = z_i, z_j
            dy_from, dy_to = _DELTA, -_DELTA
        else:
            x_from, x_to = band.j, band.i
            z_from, z_to = z_j, z_i
            dy_from, dy_to = -_DELTA, _DELTA
        core.extend(
            [
                (Fraction(x_from), corridor_y, z_from),
                (Fraction(x_from), Fraction(-1), z_from),
                mid,
                (Fraction(x_to), Fraction(-1), z_to),
                (Fraction(x_to), corridor_y, z_to),
            ]
        )
        push.extend(
            [
                (Fraction(x_from) + _DELTA, corridor_y, z_from),
                (Fraction(x_from) + _DELTA, Fraction(-1) + dy_from, z_from),
                mid_push,
                (Fraction(x_to) + _DELTA, Fraction(-1) + dy_to, z_to),
                (Fraction(x_to) + _DELTA, corridor_y, z_to),
            ]
        )
    return core, push


def seifert_matrix(rep: BandRepresentation) -> SeifertMatrix:
    """Seifert matrix of S(rep) on the fundamental cycles of its handle graph."""
    cycles = _basis_cycles(rep)
    if not cycles:
        return SeifertMatrix(())
    slot_map: dict[int, list[int]] = {}
    for index, traversals in enumerate(cycles):
        for pos, _ in traversals:
            slot_map.setdefault(pos, []).append(index)
    loops = []
    for index, traversals in enumerate(cycles):
        corridor_y = Fraction(index + 2)
        loops.append(_cycle_loops(rep, slot_map, traversals, index, corridor_y))
    size = len(cycles)
    entries = tuple(
        tuple(linking_number(loops[a][1], loops[b][0]) for b in range(size))
        for a in range(size)
    )
    return SeifertMatrix(entries)


def alexander_from_seifert(matrix: SeifertMatrix) -> LaurentPolynomial:
    """det(V - t V^T), canonical up to units; the 0x0 matrix gives 1."""
    size = matrix.size
    if size == 0:
        return LaurentPolynomial.one()
    t = LaurentPolynomial.t_power(1)
    grid = tuple(
        tuple(
            LaurentPolynomial.constant(matrix.entries[i][j]) - t * LaurentPolynomial.constant(matrix.entries[j][i])
            for j in range(size)
        )
        for i in range(size)
    )
    return mat_det(grid).canonical()


def alexander_of_rep(rep: BandRepresentation) -> LaurentPolynomial:
    """Alexander polynomial of the boundary link, via the Burau route."""
    return alexander_from_braid(beta(rep))
