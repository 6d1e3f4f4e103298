"""Fans: finite face-closed collections of strongly convex cones.

Validation closes the input under faces and then checks the defining
compatibility condition, that the intersection of any two cones is a face
of each.  A failed check reports the offending pair together with their
intersection so the caller can see exactly where compatibility breaks.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .cones import Cone


class FanValidationError(ValueError):
    """Raised when a cone collection fails the pairwise face condition."""

    def __init__(self, first: Cone, second: Cone, intersection: Cone):
        self.first = first
        self.second = second
        self.intersection = intersection
        super().__init__(
            f"cones {first.generators} and {second.generators} intersect in "
            f"{intersection.generators}, which is not a face of both"
        )


class Fan:
    """An immutable validated fan, stored as the full face-closed cone list."""

    __slots__ = ("rank", "cones")

    def __init__(self, cones: Iterable[Cone], rank: int | None = None):
        cone_list = list(cones)
        if rank is None:
            if not cone_list:
                raise ValueError("cannot infer lattice rank from an empty fan")
            rank = cone_list[0].rank
        for c in cone_list:
            if c.rank != rank:
                raise ValueError(f"cone {c.generators} lives in rank {c.rank}, expected {rank}")
            if not c.is_strongly_convex:
                raise ValueError(f"cone {c.generators} is not strongly convex")
        # check the cones as given first, so a failure is reported in
        # terms of the caller's cones rather than some synthesized face
        distinct = sorted(set(cone_list), key=Cone.sort_key)
        _check_pairs(distinct)
        closed: set[Cone] = set()
        for c in cone_list:
            if c not in closed:
                closed.update(c.faces())
        if not closed:
            closed.add(Cone.zero(rank))
        ordered = sorted(closed, key=Cone.sort_key)
        _check_pairs(ordered)
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "cones", tuple(ordered))

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("Fan is immutable")

    def __iter__(self):
        return iter(self.cones)

    def __len__(self) -> int:
        return len(self.cones)

    def __contains__(self, cone: Cone) -> bool:
        return cone in set(self.cones)

    def skeleton(self, dim: int) -> tuple[Cone, ...]:
        """All cones of exactly the given dimension."""
        return tuple(c for c in self.cones if c.dim == dim)

    def codim_le1_subfan(self) -> "Fan":
        """The subfan of zero- and one-dimensional cones."""
        return Fan([c for c in self.cones if c.dim <= 1], self.rank)

    def maximal_cones(self) -> tuple[Cone, ...]:
        """Cones that are not proper faces of any other cone in the fan."""
        maximal = []
        for c in self.cones:
            if not any(c is not d and c.is_face_of(d) for d in self.cones):
                maximal.append(c)
        return tuple(maximal)

    def rays(self) -> tuple:
        """Primitive generators of the one-dimensional cones, sorted."""
        return tuple(sorted(c.generators[0] for c in self.skeleton(1)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Fan):
            return NotImplemented
        return self.rank == other.rank and self.cones == other.cones

    def __hash__(self) -> int:
        return hash((self.rank, self.cones))

    def __repr__(self) -> str:
        return f"Fan({len(self.cones)} cones, rank={self.rank})"


def _check_pairs(cones: Sequence[Cone]) -> None:
    for i, a in enumerate(cones):
        for b in cones[i + 1:]:
            meet = a.intersection(b)
            if not (meet.is_face_of(a) and meet.is_face_of(b)):
                raise FanValidationError(a, b, meet)


def validate_fan(cones: Iterable[Cone], rank: int | None = None) -> Fan:
    """Close the given cones under faces and validate the fan axioms.

    Returns the validated fan; raises FanValidationError when two cones
    meet badly, with the offending pair recorded on the exception.
    """
    return Fan(cones, rank)


def fan_from_generators(cone_generators: Sequence[Sequence[Sequence[int]]], rank: int) -> Fan:
    """Build a fan from raw generator lists for its (typically maximal) cones."""
    return Fan([Cone(gens, rank) for gens in cone_generators], rank)
