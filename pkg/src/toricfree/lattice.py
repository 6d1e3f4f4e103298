"""Exact linear algebra over the integers and rationals.

Everything here runs on Python's arbitrary-precision ``int`` and
``fractions.Fraction``; no floating point is used anywhere.  Vectors are
plain tuples of ints, matrices are lists of rows.  The normal forms
(Hermite, Smith) return the transformation matrices alongside the reduced
matrix so callers can verify the defining identities directly.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Vector = tuple[int, ...]
Matrix = list[list[int]]


def vec(coords: Iterable[int]) -> Vector:
    return tuple(int(c) for c in coords)


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return sum(x * y for x, y in zip(a, b))


def is_zero(v: Sequence[int]) -> bool:
    return all(c == 0 for c in v)


def negated(v: Sequence[int]) -> Vector:
    return tuple(-c for c in v)


def content(v: Sequence[int]) -> int:
    """Gcd of the entries (0 for the zero vector)."""
    g = 0
    for c in v:
        g = gcd(g, c)
    return g


def primitive(v: Sequence[int]) -> Vector:
    """Divide out the content, leaving the shortest integer vector on the same ray.

    Raises ValueError on the zero vector, which spans no ray.
    """
    g = content(v)
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(c // g for c in v)


def is_primitive(v: Sequence[int]) -> bool:
    return content(v) == 1


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (g, x, y) with g = a*x + b*y and g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def identity_matrix(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def copy_matrix(a: Sequence[Sequence[int]]) -> Matrix:
    return [list(row) for row in a]


def transpose(a: Sequence[Sequence[int]]) -> Matrix:
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def mat_vec(a: Sequence[Sequence[int]], x: Sequence[int]) -> Vector:
    return tuple(dot(row, x) for row in a)


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise ValueError("inner dimension mismatch")
    bt = transpose(b)
    return [[dot(row, col) for col in bt] for row in a]


def determinant(a: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free (Bareiss) elimination."""
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant requires a square matrix")
    if n == 0:
        return 1
    m = copy_matrix(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def matrix_rank(a: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix, computed by exact Euclidean column elimination.

    Entries stay small because rows are reduced against each other with
    floor-division steps instead of cross-multiplication.
    """
    rows = [list(r) for r in a if not is_zero(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    col = 0
    while rank < len(rows) and col < ncols:
        live = [i for i in range(rank, len(rows)) if rows[i][col] != 0]
        if not live:
            col += 1
            continue
        while len(live) > 1:
            live.sort(key=lambda i: abs(rows[i][col]))
            base = live[0]
            for i in live[1:]:
                q = rows[i][col] // rows[base][col]
                rows[i] = [x - q * y for x, y in zip(rows[i], rows[base])]
            live = [i for i in live if rows[i][col] != 0]
        pivot_row = live[0]
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        rank += 1
        col += 1
    return rank


def hermite_normal_form(a: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix]:
    """Row-style Hermite normal form.

    Returns (H, U) with H = U @ a, U unimodular, H upper staircase with
    positive pivots, entries above each pivot reduced into [0, pivot),
    and zero rows collected at the bottom.
    """
    m = len(a)
    h = copy_matrix(a)
    u = identity_matrix(m)
    ncols = len(h[0]) if h else 0
    row = 0
    for col in range(ncols):
        pivot = None
        for i in range(row, m):
            if h[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        h[row], h[pivot] = h[pivot], h[row]
        u[row], u[pivot] = u[pivot], u[row]
        for i in range(row + 1, m):
            if h[i][col] == 0:
                continue
            if h[i][col] % h[row][col] == 0:
                q = h[i][col] // h[row][col]
                h[i] = [ri - q * rr for rr, ri in zip(h[row], h[i])]
                u[i] = [ri - q * rr for rr, ri in zip(u[row], u[i])]
            else:
                g, x, y = xgcd(h[row][col], h[i][col])
                p, q = h[row][col] // g, h[i][col] // g
                # [[x, y], [-q, p]] has determinant 1 and sends the two
                # column entries to (g, 0).
                new_row = [x * rr + y * ri for rr, ri in zip(h[row], h[i])]
                new_i = [-q * rr + p * ri for rr, ri in zip(h[row], h[i])]
                h[row], h[i] = new_row, new_i
                new_urow = [x * rr + y * ri for rr, ri in zip(u[row], u[i])]
                new_ui = [-q * rr + p * ri for rr, ri in zip(u[row], u[i])]
                u[row], u[i] = new_urow, new_ui
        if h[row][col] < 0:
            h[row] = [-c for c in h[row]]
            u[row] = [-c for c in u[row]]
        p = h[row][col]
        for i in range(row):
            q = h[i][col] // p
            if q:
                h[i] = [c - q * d for c, d in zip(h[i], h[row])]
                u[i] = [c - q * d for c, d in zip(u[i], u[row])]
        row += 1
        if row == m:
            break
    return h, u


def smith_normal_form(a: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form.

    Returns (D, U, V) with D = U @ a @ V, U and V unimodular, D diagonal
    with nonnegative entries d_1 | d_2 | ... (nonzero factors first).
    """
    m = len(a)
    n = len(a[0]) if a else 0
    d = copy_matrix(a)
    u = identity_matrix(m)
    v = identity_matrix(n)

    def row_combine(i: int, j: int, x: int, y: int, z: int, w: int) -> None:
        # rows i, j <- (x*ri + y*rj, z*ri + w*rj); caller keeps x*w - y*z = +-1
        d[i], d[j] = (
            [x * p + y * q for p, q in zip(d[i], d[j])],
            [z * p + w * q for p, q in zip(d[i], d[j])],
        )
        u[i], u[j] = (
            [x * p + y * q for p, q in zip(u[i], u[j])],
            [z * p + w * q for p, q in zip(u[i], u[j])],
        )

    def col_combine(i: int, j: int, x: int, y: int, z: int, w: int) -> None:
        for row in (d, v):
            for r in row:
                r[i], r[j] = x * r[i] + y * r[j], z * r[i] + w * r[j]

    t = 0
    while t < min(m, n):
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                e = abs(d[i][j])
                if e and (best is None or e < best):
                    best = e
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            d[t], d[pi] = d[pi], d[t]
            u[t], u[pi] = u[pi], u[t]
        if pj != t:
            for r in d:
                r[t], r[pj] = r[pj], r[t]
            for r in v:
                r[t], r[pj] = r[pj], r[t]
        while True:
            for i in range(t + 1, m):
                if d[i][t]:
                    if d[i][t] % d[t][t] == 0:
                        # plain elimination keeps row t intact
                        q = d[i][t] // d[t][t]
                        row_combine(t, i, 1, 0, -q, 1)
                    else:
                        g, x, y = xgcd(d[t][t], d[i][t])
                        p, q = d[t][t] // g, d[i][t] // g
                        row_combine(t, i, x, y, -q, p)
            for j in range(t + 1, n):
                if d[t][j]:
                    if d[t][j] % d[t][t] == 0:
                        q = d[t][j] // d[t][t]
                        col_combine(t, j, 1, 0, -q, 1)
                    else:
                        g, x, y = xgcd(d[t][t], d[t][j])
                        p, q = d[t][t] // g, d[t][j] // g
                        col_combine(t, j, x, y, -q, p)
            if any(d[i][t] for i in range(t + 1, m)):
                continue  # the column ops can reintroduce entries below the pivot
            off = None
            piv = d[t][t]
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if d[i][j] % piv:
                        off = i
                        break
                if off is not None:
                    break
            if off is None:
                break
            row_combine(t, off, 1, 1, 0, 1)  # pull the offending row up, then re-reduce
        if d[t][t] < 0:
            d[t] = [-c for c in d[t]]
            u[t] = [-c for c in u[t]]
        t += 1
    return d, u, v


def invariant_factors(a: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Nonzero diagonal entries of the Smith form, in divisibility order."""
    d, _, _ = smith_normal_form(a)
    return tuple(d[i][i] for i in range(min(len(d), len(d[0]) if d else 0)) if d[i][i])


def solve_integer_system(a: Sequence[Sequence[int]], b: Sequence[int]) -> Vector | None:
    """One integer solution x of a @ x = b, or None when no integer solution exists.

    The solution is pinned down deterministically: in Smith coordinates every
    free component is set to zero, so equal inputs always give equal outputs.
    """
    m = len(a)
    n = len(a[0]) if a else 0
    if len(b) != m:
        raise ValueError(f"system has {m} equations but {len(b)} right-hand sides")
    if m == 0:
        return (0,) * n
    d, u, v = smith_normal_form(a)
    c = mat_vec(u, b)
    y = [0] * n
    for i in range(m):
        di = d[i][i] if i < n else 0
        if di:
            if c[i] % di:
                return None
            y[i] = c[i] // di
        elif c[i]:
            return None
    return mat_vec(v, y)


def integer_kernel_basis(a: Sequence[Sequence[int]]) -> list[Vector]:
    """Canonical basis of the saturated kernel {x in Z^n : a @ x = 0}.

    Works on a with n columns; when a is empty the kernel is all of Z^n.
    The rows returned are the Hermite normal form of a kernel basis, so the
    result is canonical for the kernel as a sublattice.
    """
    if not a:
        raise ValueError("cannot infer ambient rank from an empty matrix; pass explicit rows")
    n = len(a[0])
    h, w = hermite_normal_form(transpose(a))
    kernel_rows = [w[i] for i in range(n) if is_zero(h[i])]
    if not kernel_rows:
        return []
    hk, _ = hermite_normal_form(kernel_rows)
    return [vec(row) for row in hk if not is_zero(row)]


def extends_to_lattice_basis(vectors: Sequence[Sequence[int]]) -> bool:
    """Whether the given integer vectors extend to a basis of the full lattice.

    True exactly when they are linearly independent and every invariant
    factor of their matrix equals 1.  The empty family extends trivially.
    """
    rows = [vec(v) for v in vectors]
    if not rows:
        return True
    factors = invariant_factors(rows)
    return len(factors) == len(rows) and all(f == 1 for f in factors)


class RationalSubspace:
    """A linear subspace of Q^n in canonical reduced row echelon form.

    Instances are immutable and hashable; two subspaces compare equal
    exactly when they contain the same vectors, because the stored basis
    is the unique RREF basis.
    """

    __slots__ = ("ambient", "basis")

    def __init__(self, ambient: int, rows: Iterable[Sequence[Fraction | int]] = ()):
        if ambient < 0:
            raise ValueError("ambient dimension must be nonnegative")
        object.__setattr__(self, "ambient", ambient)
        reduced = _rref([[Fraction(c) for c in row] for row in rows], ambient)
        object.__setattr__(self, "basis", tuple(tuple(r) for r in reduced))

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("RationalSubspace is immutable")

    @classmethod
    def span(cls, ambient: int, vectors: Iterable[Sequence[Fraction | int]]) -> "RationalSubspace":
        return cls(ambient, vectors)

    @classmethod
    def zero(cls, ambient: int) -> "RationalSubspace":
        return cls(ambient)

    @classmethod
    def full(cls, ambient: int) -> "RationalSubspace":
        return cls(ambient, identity_matrix(ambient))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def contains(self, v: Sequence[Fraction | int]) -> bool:
        if len(v) != self.ambient:
            raise ValueError(f"vector length {len(v)} in ambient dimension {self.ambient}")
        residue = [Fraction(c) for c in v]
        for row in self.basis:
            pivot = _pivot_index(row)
            coeff = residue[pivot]
            if coeff:
                residue = [c - coeff * r for c, r in zip(residue, row)]
        return all(c == 0 for c in residue)

    def contains_subspace(self, other: "RationalSubspace") -> bool:
        return all(self.contains(row) for row in other.basis)

    def __add__(self, other: "RationalSubspace") -> "RationalSubspace":
        if self.ambient != other.ambient:
            raise ValueError("ambient dimension mismatch")
        return RationalSubspace(self.ambient, list(self.basis) + list(other.basis))

    def intersection(self, other: "RationalSubspace") -> "RationalSubspace":
        if self.ambient != other.ambient:
            raise ValueError("ambient dimension mismatch")
        return (self.orthogonal_complement() + other.orthogonal_complement()).orthogonal_complement()

    def orthogonal_complement(self) -> "RationalSubspace":
        """Complement with respect to the standard dot product on Q^n."""
        return RationalSubspace(self.ambient, _fraction_kernel(self.basis, self.ambient))

    def integer_basis(self) -> list[Vector]:
        """The RREF basis rescaled to primitive integer vectors."""
        result = []
        for row in self.basis:
            lcm = 1
            for c in row:
                lcm = lcm * c.denominator // gcd(lcm, c.denominator)
            result.append(primitive([int(c * lcm) for c in row]))
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalSubspace):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient, self.basis))

    def __repr__(self) -> str:
        rows = ", ".join("(" + ", ".join(str(c) for c in row) + ")" for row in self.basis)
        return f"RationalSubspace({self.ambient}, [{rows}])"


def _pivot_index(row: Sequence[Fraction]) -> int:
    for j, c in enumerate(row):
        if c:
            return j
    raise ValueError("zero row has no pivot")


def _rref(rows: list[list[Fraction]], ambient: int) -> list[list[Fraction]]:
    for row in rows:
        if len(row) != ambient:
            raise ValueError(f"row length {len(row)} in ambient dimension {ambient}")
    reduced: list[list[Fraction]] = []
    for row in rows:
        work = row[:]
        for r in reduced:
            pivot = _pivot_index(r)
            if work[pivot]:
                coeff = work[pivot]
                work = [c - coeff * d for c, d in zip(work, r)]
        if any(work):
            pivot = _pivot_index(work)
            inv = work[pivot]
            work = [c / inv for c in work]
            for r in reduced:
                if r[pivot]:
                    coeff = r[pivot]
                    r[:] = [c - coeff * d for c, d in zip(r, work)]
            reduced.append(work)
    reduced.sort(key=_pivot_index)
    return reduced


def _fraction_kernel(rows: Sequence[Sequence[Fraction]], ambient: int) -> list[list[Fraction]]:
    """Kernel basis of a matrix already in RREF, by free-variable back substitution."""
    pivots = [_pivot_index(row) for row in rows]
    pivot_set = set(pivots)
    free = [j for j in range(ambient) if j not in pivot_set]
    kernel = []
    for f in free:
        v = [Fraction(0)] * ambient
        v[f] = Fraction(1)
        for row, p in zip(rows, pivots):
            v[p] = -row[f]
        kernel.append(v)
    return kernel
