"""Filtration data for the tangent sheaf and the local-freeness decision.

The tangent sheaf on the open piece attached to a ray is described by one
decreasing filtration of the ambient space per ray: the full space up to
level 0, the line through the ray generator at level 1, zero from level 2
on.  On a cone, local freeness amounts to a weight-graded splitting of the
ambient space that reproduces every ray filtration; such a splitting is a
checkable certificate, and for the tangent sheaf it exists exactly when
integral dual weights with delta pairings against the rays do.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .cones import Cone, linearly_independent_rays
from .lattice import RationalSubspace, Vector, dot, is_primitive, solve_integer_system, vec


class Filtration:
    """A decreasing integer-indexed family of subspaces of Q^n.

    The value is the full space below the first breakpoint and must reach
    zero at the last one.  Stored canonically as (index, subspace) pairs
    with strictly decreasing subspaces, so equal filtrations compare equal.
    """

    __slots__ = ("ambient", "steps")

    def __init__(self, ambient: int, steps: Sequence[tuple[int, RationalSubspace]]):
        previous = RationalSubspace.full(ambient)
        canonical: list[tuple[int, RationalSubspace]] = []
        for i, sub in sorted(steps, key=lambda s: s[0]):
            if sub.ambient != ambient:
                raise ValueError("subspace ambient dimension mismatch")
            if canonical and canonical[-1][0] == i:
                raise ValueError(f"duplicate breakpoint {i}")
            if sub == previous:
                continue
            if not previous.contains_subspace(sub):
                raise ValueError(f"filtration increases at level {i}")
            canonical.append((int(i), sub))
            previous = sub
        if previous.dim != 0:
            raise ValueError("filtration must reach the zero subspace")
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "steps", tuple(canonical))

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("Filtration is immutable")

    @property
    def breakpoints(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.steps)

    def at(self, i: int) -> RationalSubspace:
        """The subspace at level i."""
        current = RationalSubspace.full(self.ambient)
        for j, sub in self.steps:
            if i >= j:
                current = sub
            else:
                break
        return current

    def __eq__(self, other) -> bool:
        if not isinstance(other, Filtration):
            return NotImplemented
        return self.ambient == other.ambient and self.steps == other.steps

    def __hash__(self) -> int:
        return hash((self.ambient, self.steps))

    def __repr__(self) -> str:
        parts = ", ".join(f"{i}: dim {sub.dim}" for i, sub in self.steps)
        return f"Filtration({self.ambient}, [{parts}])"


FiltrationFamily = Mapping[Vector, Filtration]
"""A filtration per ray, keyed by the primitive ray generator."""


def tangent_filtration(ray: Sequence[int], ambient_rank: int) -> Filtration:
    """The three-level filtration of the tangent sheaf at one ray.

    Full space through level 0, the line spanned by the ray generator at
    level 1, zero from level 2 on.
    """
    u = vec(ray)
    if len(u) != ambient_rank:
        raise ValueError(f"ray length {len(u)}, expected {ambient_rank}")
    if not is_primitive(u):
        raise ValueError(f"ray generator {u} is not primitive")
    return Filtration(ambient_rank, [
        (1, RationalSubspace.span(ambient_rank, [u])),
        (2, RationalSubspace.zero(ambient_rank)),
    ])


def tangent_family(cone: Cone) -> dict[Vector, Filtration]:
    """Tangent filtrations for every ray of a strongly convex cone."""
    return {u: tangent_filtration(u, cone.rank) for u in cone.rays()}


def sections_dimension(ray: Sequence[int], m: Sequence[int]) -> int:
    """Dimension of the weight-m graded piece of tangent sections at one ray.

    Equals the tangent filtration evaluated at minus the pairing of m with
    the ray generator: the ambient rank when the pairing is nonnegative,
    1 when it is exactly -1, and 0 below that.
    """
    u = vec(ray)
    filt = tangent_filtration(u, len(u))
    return filt.at(-dot(m, u)).dim


@dataclass(frozen=True)
class DecompositionCertificate:
    """A candidate weight-graded splitting of the ambient space on a cone.

    Entries pair a weight class (canonical representative modulo the
    cone's annihilator sublattice) with a subspace.  Validity is decided
    by verify_certificate, not the constructor.
    """

    cone: Cone
    entries: tuple[tuple[Vector, RationalSubspace], ...]

    def __init__(self, cone: Cone, entries):
        normalized = tuple(sorted(((vec(m), sub) for m, sub in entries), key=lambda e: e[0]))
        object.__setattr__(self, "cone", cone)
        object.__setattr__(self, "entries", normalized)


@dataclass(frozen=True)
class LocalFreenessReport:
    """Outcome of the local-freeness decision on one cone."""

    verdict: bool
    witnesses: dict[Vector, Vector] | None = None
    certificate: DecompositionCertificate | None = None
    failure: str | None = None
    failing_ray: Vector | None = None


def diagnose_certificate(cone: Cone, family: FiltrationFamily,
                         cert: DecompositionCertificate) -> str | None:
    """Check a certificate against a filtration family; None means valid.

    The certificate must split the ambient space as a direct sum, and for
    every ray the partial sums over classes pairing at least i with the
    ray generator must reproduce the filtration at every level i.  Both
    sides are step functions of i, so it suffices to compare at each
    breakpoint, each pairing threshold, and one point below all of them.
    """
    n = cone.rank
    if cert.cone != cone:
        raise ValueError("certificate was issued for a different cone")
    rays = cone.rays()
    for u in rays:
        if u not in family:
            raise ValueError(f"family has no filtration for ray {u}")
    for _, filt in family.items():
        if filt.ambient != n:
            raise ValueError("filtration ambient dimension mismatch")
    entries = cert.entries
    classes = [cone.weight_class(m) for m, _ in entries]
    if len(set(classes)) != len(classes):
        return "weight classes are not pairwise distinct modulo the annihilator"
    for m, sub in entries:
        if vec(m) != cone.weight_class(m):
            return f"weight {m} is not the canonical class representative"
        if sub.ambient != n:
            return "certificate subspace has wrong ambient dimension"
        if sub.dim == 0:
            return f"zero subspace attached to class {m}"
    total_dim = sum(sub.dim for _, sub in entries)
    span_all = RationalSubspace.zero(n)
    for _, sub in entries:
        span_all = span_all + sub
    if total_dim != n or span_all != RationalSubspace.full(n):
        return "subspaces do not sum directly to the full space"
    for u in rays:
        filt = family[u]
        pairings = [dot(m, u) for m, _ in entries]
        levels = set(filt.breakpoints) | {p + 1 for p in pairings}
        levels.add(min(levels) - 1)
        for i in sorted(levels):
            expected = filt.at(i)
            got = RationalSubspace.zero(n)
            for (m, sub), p in zip(entries, pairings):
                if p >= i:
                    got = got + sub
            if got != expected:
                return (f"filtration mismatch at ray {u}, level {i}: "
                        f"summed dimension {got.dim}, filtration dimension {expected.dim}")
    return None


def verify_certificate(cone: Cone, family: FiltrationFamily,
                       cert: DecompositionCertificate) -> bool:
    """True iff the certificate reproduces the family; see diagnose_certificate."""
    return diagnose_certificate(cone, family, cert) is None


def decide_tangent_locally_free(cone: Cone) -> LocalFreenessReport:
    """Decide local freeness of the tangent sheaf on one strongly convex cone.

    The verdict is true exactly when the extreme rays are linearly
    independent and each ray generator admits an integral dual weight
    pairing 1 with it and 0 with every other ray.  On success the emitted
    certificate assigns the line through each ray generator to its witness
    class, with any left-over directions carried by the zero class.
    """
    n = cone.rank
    rays = cone.rays()
    if not rays:
        cert = DecompositionCertificate(cone, [((0,) * n, RationalSubspace.full(n))])
        _assert_certificate(cone, cert)
        return LocalFreenessReport(True, witnesses={}, certificate=cert)
    if not linearly_independent_rays(cone):
        return LocalFreenessReport(False, failure="dependent rays")
    matrix = [list(u) for u in rays]
    witnesses: dict[Vector, Vector] = {}
    for idx, u in enumerate(rays):
        rhs = [1 if j == idx else 0 for j in range(len(rays))]
        m = solve_integer_system(matrix, rhs)
        if m is None:
            return LocalFreenessReport(
                False, failure=f"no integral dual weight for ray {u}", failing_ray=u)
        witnesses[u] = m
    entries: list[tuple[Vector, RationalSubspace]] = []
    for u in rays:
        entries.append((cone.weight_class(witnesses[u]), RationalSubspace.span(n, [u])))
    ray_span = RationalSubspace.span(n, rays)
    if ray_span.dim < n:
        entries.append((cone.weight_class((0,) * n), ray_span.orthogonal_complement()))
    cert = DecompositionCertificate(cone, entries)
    _assert_certificate(cone, cert)
    return LocalFreenessReport(True, witnesses=witnesses, certificate=cert)


def _assert_certificate(cone: Cone, cert: DecompositionCertificate) -> None:
    problem = diagnose_certificate(cone, tangent_family(cone), cert)
    if problem is not None:
        raise AssertionError(f"emitted certificate failed verification: {problem}")


@dataclass(frozen=True)
class FanFreenessReport:
    """Per-cone local-freeness reports over a whole fan."""

    verdict: bool
    per_cone: tuple[tuple[Cone, LocalFreenessReport], ...]


def decide_tangent_locally_free_on_fan(fan) -> FanFreenessReport:
    """Run the local-freeness decision on every cone of a validated fan.

    Every cone is checked, not only the maximal ones; the global verdict
    is the conjunction.
    """
    per_cone = tuple((c, decide_tangent_locally_free(c)) for c in fan.cones)
    return FanFreenessReport(all(r.verdict for _, r in per_cone), per_cone)
