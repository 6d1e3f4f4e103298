"""Rational polyhedral cones: duals, faces, and canonical generator sets.

A cone lives in a fixed lattice of rank n and is stored by its canonical
generating set.  For strongly convex cones that set is the sorted tuple of
primitive extreme ray generators.  Dual cones need not be strongly convex;
their lineality space enters the generator list as explicit plus/minus
pairs of basis vectors, so membership is always the single uniform test
"pairs nonnegatively against every dual generator".
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .lattice import (
    RationalSubspace,
    Vector,
    dot,
    identity_matrix,
    integer_kernel_basis,
    is_zero,
    matrix_rank,
    negated,
    primitive,
    vec,
)


class NotStronglyConvexError(ValueError):
    """Raised when cone input contains a line.

    The witness is a primitive lattice vector v with both v and -v in the
    cone described by the input generators.
    """

    def __init__(self, witness: Vector):
        self.witness = witness
        super().__init__(f"cone contains the line through {witness}")


class Cone:
    """An immutable cone in canonical form.

    Public construction goes through ``Cone(generators, rank)`` which
    rejects input spanning a line and reduces the generators to the sorted
    primitive extreme rays.  Equality and hashing use only the canonical
    generator tuple, so equal cones are interchangeable everywhere.
    """

    __slots__ = ("rank", "generators", "_lineality_rows", "_dual", "_dim", "_perp", "_faces")

    def __init__(self, generators: Iterable[Sequence[int]], rank: int, *,
                 _canonical: bool = False, _lineality_rows: tuple[Vector, ...] = ()):
        if rank < 1:
            raise ValueError("lattice rank must be at least 1")
        gens = []
        for g in generators:
            v = vec(g)
            if len(v) != rank:
                raise ValueError(f"generator {v} has length {len(v)}, expected {rank}")
            if is_zero(v):
                continue
            gens.append(primitive(v))
        gens = sorted(set(gens))
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "_dual", None)
        object.__setattr__(self, "_dim", None)
        object.__setattr__(self, "_perp", None)
        object.__setattr__(self, "_faces", None)
        if _canonical:
            object.__setattr__(self, "generators", tuple(gens))
            object.__setattr__(self, "_lineality_rows", tuple(_lineality_rows))
            return
        lin_rows, dual_rays = _double_description(gens, rank)
        if lin_rows or dual_rays:
            witness_rows = integer_kernel_basis([list(v) for v in lin_rows + dual_rays])
        else:
            witness_rows = [vec(row) for row in identity_matrix(rank)]
        if witness_rows:
            raise NotStronglyConvexError(witness_rows[0])
        # dual rays are already reduced off the dual lineality, so ranks add
        extreme = [g for g in gens if _is_extreme(g, dual_rays, rank, len(lin_rows))]
        object.__setattr__(self, "generators", tuple(extreme))
        object.__setattr__(self, "_lineality_rows", ())
        dual = Cone(
            [negated(v) for v in lin_rows] + list(lin_rows) + list(dual_rays),
            rank, _canonical=True, _lineality_rows=tuple(lin_rows),
        )
        object.__setattr__(self, "_dual", dual)

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("Cone is immutable")

    @classmethod
    def zero(cls, rank: int) -> "Cone":
        return cls((), rank)

    @property
    def dim(self) -> int:
        if self._dim is None:
            object.__setattr__(self, "_dim", matrix_rank([list(g) for g in self.generators]))
        return self._dim

    @property
    def is_strongly_convex(self) -> bool:
        return not self._lineality_rows

    @property
    def lineality_basis(self) -> tuple[Vector, ...]:
        return self._lineality_rows

    @property
    def dual(self) -> "Cone":
        """The dual cone in the paired lattice, computed once and cached."""
        if self._dual is None:
            lin_rows, rays = _double_description(self.generators, self.rank)
            dual = Cone(
                [negated(v) for v in lin_rows] + list(lin_rows) + list(rays),
                self.rank, _canonical=True, _lineality_rows=tuple(lin_rows),
            )
            object.__setattr__(self, "_dual", dual)
        return self._dual

    @property
    def facet_normals(self) -> tuple[Vector, ...]:
        """Extreme rays of the dual beyond its lineality pairs.

        Together with the span constraints these are the irredundant
        inequalities cutting the cone out of its linear span.
        """
        lin = set(self.dual._lineality_rows) | {negated(v) for v in self.dual._lineality_rows}
        return tuple(g for g in self.dual.generators if g not in lin)

    def contains(self, v: Sequence[int]) -> bool:
        w = vec(v)
        if len(w) != self.rank:
            raise ValueError(f"vector length {len(w)}, expected {self.rank}")
        return all(dot(d, w) >= 0 for d in self.dual.generators)

    def rays(self) -> tuple[Vector, ...]:
        """Primitive generators of the one-dimensional faces."""
        self._require_strongly_convex()
        return self.generators

    def _require_strongly_convex(self) -> None:
        if self._lineality_rows:
            raise ValueError("operation requires a strongly convex cone")

    def faces(self) -> tuple["Cone", ...]:
        """All faces, the cone itself and the zero cone included, in canonical order."""
        self._require_strongly_convex()
        if self._faces is not None:
            return self._faces
        normals = self.facet_normals
        seen: dict[frozenset[Vector], Cone] = {}
        start = frozenset(self.generators)
        seen[start] = self
        queue = [start]
        while queue:
            current = queue.pop()
            for f in normals:
                cut = frozenset(r for r in current if dot(f, r) == 0)
                if cut not in seen:
                    seen[cut] = Cone(sorted(cut), self.rank, _canonical=True)
                    queue.append(cut)
        if start not in seen:  # unreachable, kept for clarity
            seen[start] = self
        if frozenset() not in seen:
            seen[frozenset()] = Cone((), self.rank, _canonical=True)
        result = tuple(sorted(seen.values(), key=lambda c: (c.dim, c.generators)))
        object.__setattr__(self, "_faces", result)
        return result

    def is_face_of(self, other: "Cone") -> bool:
        """Whether this cone is a face of ``other``.

        Both cones must be strongly convex and live in the same lattice.
        """
        if self.rank != other.rank:
            raise ValueError("cones live in different lattices")
        self._require_strongly_convex()
        other._require_strongly_convex()
        if not all(other.contains(g) for g in self.generators):
            return False
        active = [f for f in other.facet_normals
                  if all(dot(f, g) == 0 for g in self.generators)]
        cut = frozenset(r for r in other.generators
                        if all(dot(f, r) == 0 for f in active))
        return cut == frozenset(self.generators)

    def perp_sublattice(self) -> list[Vector]:
        """Canonical basis of the annihilator of the cone in the dual lattice.

        These are the lattice vectors pairing to zero with every generator,
        returned as Hermite-reduced rows of a saturated sublattice.
        """
        if self._perp is None:
            if self.generators:
                rows = integer_kernel_basis([list(g) for g in self.generators])
            else:
                rows = [vec(r) for r in identity_matrix(self.rank)]
            object.__setattr__(self, "_perp", rows)
        return list(self._perp)

    def weight_class(self, m: Sequence[int]) -> Vector:
        """Canonical representative of a dual-lattice vector modulo the annihilator.

        The representative is obtained by top-down reduction against the
        Hermite basis of ``perp_sublattice``, so equal classes always reduce
        to the same tuple.
        """
        w = list(vec(m))
        if len(w) != self.rank:
            raise ValueError(f"weight length {len(w)}, expected {self.rank}")
        for row in self.perp_sublattice():
            pivot = next(j for j, c in enumerate(row) if c)
            q = w[pivot] // row[pivot]
            if q:
                w = [a - q * b for a, b in zip(w, row)]
        return tuple(w)

    def span(self) -> RationalSubspace:
        return RationalSubspace.span(self.rank, self.generators)

    def intersection(self, other: "Cone") -> "Cone":
        """The cone cut out by the inequalities of both cones."""
        if self.rank != other.rank:
            raise ValueError("cones live in different lattices")
        normals = list(self.dual.generators) + list(other.dual.generators)
        lin_rows, rays = _double_description(normals, self.rank)
        return Cone(
            [negated(v) for v in lin_rows] + list(lin_rows) + list(rays),
            self.rank, _canonical=True, _lineality_rows=tuple(lin_rows),
        )

    def sort_key(self) -> tuple:
        return (self.dim, self.generators)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cone):
            return NotImplemented
        return self.rank == other.rank and self.generators == other.generators

    def __hash__(self) -> int:
        return hash((self.rank, self.generators))

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators)
        return f"Cone([{gens}], rank={self.rank})"


def dual_cone(cone: Cone) -> Cone:
    return cone.dual


def linearly_independent_rays(cone: Cone) -> bool:
    """Whether the extreme ray generators are linearly independent over Q."""
    gens = cone.rays()
    return matrix_rank([list(g) for g in gens]) == len(gens)


def _is_extreme(ray: Vector, normals: Sequence[Vector], rank: int, lineality_dim: int) -> bool:
    """Rank test for extremality of a ray of a cone given by inequality normals."""
    active = [list(a) for a in normals if dot(a, ray) == 0]
    return matrix_rank(active) == rank - lineality_dim - 1


def _double_description(normals: Sequence[Vector], rank: int) -> tuple[tuple[Vector, ...], tuple[Vector, ...]]:
    """V-description of the solution set of ``dot(a, x) >= 0`` for each a in normals.

    Returns (lineality_rows, extreme_rays): a canonical basis of the
    lineality space and the sorted primitive extreme rays of a complement
    of it inside the solution cone.  Inequalities are inserted one at a
    time; after each insertion the candidate rays are pruned back to the
    extreme ones by an active-constraint rank test, which keeps the
    intermediate sets small.

    All arithmetic is integral: a candidate ray r is replaced across the
    hyperplane of a new inequality a by combinations like
    ``dot(a, p) * r_neg - dot(a, r_neg) * p`` whose pairings cancel exactly.
    """
    lin: list[Vector] = [vec(row) for row in identity_matrix(rank)]
    rays: list[Vector] = []
    processed: list[Vector] = []
    for a in normals:
        if is_zero(a):
            continue
        pair_lin = [dot(a, l) for l in lin]
        if any(pair_lin):
            k = next(i for i, p in enumerate(pair_lin) if p)
            b0, p0 = lin[k], pair_lin[k]
            if p0 < 0:
                b0, p0 = negated(b0), -p0
            new_lin = []
            for l, pl in zip(lin, pair_lin):
                if l is lin[k]:
                    continue
                new_lin.append(l if pl == 0 else primitive([p0 * x - pl * y for x, y in zip(l, b0)]))
            new_rays = []
            for r in rays:
                pr = dot(a, r)
                new_rays.append(r if pr == 0 else primitive([p0 * x - pr * y for x, y in zip(r, b0)]))
            new_rays.append(b0)
            lin = new_lin
            rays = new_rays
            processed.append(a)
            rays = _prune(rays, processed, len(lin), rank)
        else:
            pairings = [(r, dot(a, r)) for r in rays]
            pos = [(r, p) for r, p in pairings if p > 0]
            zero = [r for r, p in pairings if p == 0]
            neg = [(r, p) for r, p in pairings if p < 0]
            if not neg:
                processed.append(a)
                continue
            combos = []
            for p_ray, pp in pos:
                for n_ray, pn in neg:
                    w = [pp * x - pn * y for x, y in zip(n_ray, p_ray)]
                    if not is_zero(w):
                        combos.append(primitive(w))
            rays = [r for r, _ in pos] + zero + combos
            processed.append(a)
            rays = _prune(rays, processed, len(lin), rank)
    lin_rows = _canonical_lineality(processed, rank, len(lin))
    rays = sorted(set(_reduce_off_lineality(r, lin_rows) for r in rays))
    return tuple(lin_rows), tuple(rays)


def _prune(rays: list[Vector], processed: list[Vector], lineality_dim: int, rank: int) -> list[Vector]:
    kept = []
    seen = set()
    for r in rays:
        if r in seen:
            continue
        seen.add(r)
        if _is_extreme(r, processed, rank, lineality_dim):
            kept.append(r)
    return kept


def _canonical_lineality(processed: Sequence[Vector], rank: int, lineality_dim: int) -> list[Vector]:
    if lineality_dim == 0:
        return []
    if not processed:
        return [vec(row) for row in identity_matrix(rank)]
    return integer_kernel_basis([list(a) for a in processed])


def _reduce_off_lineality(ray: Vector, lin_rows: Sequence[Vector]) -> Vector:
    """Project a ray to a canonical representative modulo the lineality space.

    Reduction goes through the rational row space of the Hermite lineality
    basis: the coordinates of the ray at the pivot columns are cleared
    exactly, then the result is rescaled to a primitive vector.
    """
    if not lin_rows:
        return ray
    space = RationalSubspace.span(len(ray), lin_rows)
    residue = [Fraction(c) for c in ray]
    for row in space.basis:
        pivot = next(j for j, c in enumerate(row) if c)
        coeff = residue[pivot]
        if coeff:
            residue = [c - coeff * r for c, r in zip(residue, row)]
    lcm = 1
    for c in residue:
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in residue]
    if is_zero(ints):
        raise ValueError("ray lies inside the lineality space")
    return primitive(ints)
