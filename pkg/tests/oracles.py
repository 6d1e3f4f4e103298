"""Independent oracles used only by the test suite.

Integer solving goes through sympy's Smith decomposition rather than the
package's own solver, and the local-freeness oracle enumerates the whole
forced weight box instead of reusing the decision procedure, so each
comparison genuinely crosses two routes.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_decomp

from toricfree.cones import Cone
from toricfree.klyachko import DecompositionCertificate, tangent_family, verify_certificate
from toricfree.lattice import RationalSubspace


def sympy_solve_integer(rows: list[list[int]], rhs: list[int]) -> tuple[int, ...] | None:
    """One integer solution of rows @ x = rhs via sympy's Smith decomposition."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    dm = DomainMatrix([[ZZ(c) for c in row] for row in rows], (m, n), ZZ)
    d, s, t = smith_normal_decomp(dm)
    d_list = [[int(c) for c in row] for row in d.to_list()]
    s_list = [[int(c) for c in row] for row in s.to_list()]
    t_list = [[int(c) for c in row] for row in t.to_list()]
    c = [sum(s_list[i][j] * rhs[j] for j in range(m)) for i in range(m)]
    y = [0] * n
    for i in range(m):
        di = d_list[i][i] if i < n else 0
        if di:
            if c[i] % di:
                return None
            y[i] = c[i] // di
        elif c[i]:
            return None
    return tuple(sum(t_list[i][j] * y[j] for j in range(n)) for i in range(n))


def sympy_invariant_factors(rows: list[list[int]]) -> tuple[int, ...]:
    from sympy.matrices import Matrix
    from sympy.matrices.normalforms import smith_normal_form as snf

    if not rows:
        return ()
    d = snf(Matrix(rows))
    k = min(d.shape)
    return tuple(abs(int(d[i, i])) for i in range(k) if d[i, i] != 0)


def brute_force_locally_free(cone: Cone) -> bool:
    """Exhaustive certificate search over the forced weight box.

    Any tangent certificate class must pair into {0, 1} with every ray
    (values >= 2 violate the zero tail of the filtration, and a negative
    value would exclude the class from a sum that has to be everything).
    The search solves every 0/1 pairing pattern with the sympy-based
    integer solver; a class whose pattern hits two distinct rays would
    need a subspace inside two different lines, so coverage can only come
    from the singleton patterns, each carrying that ray's line, plus the
    zero pattern carrying a complement.  Every assembled candidate goes
    through verify_certificate, which is the final authority.
    """
    rays = cone.rays()
    n = cone.rank
    if not rays:
        cert = DecompositionCertificate(cone, [((0,) * n, RationalSubspace.full(n))])
        return verify_certificate(cone, tangent_family(cone), cert)
    k = len(rays)
    matrix = [list(u) for u in rays]
    achievable: dict[tuple[int, ...], tuple[int, ...]] = {}
    for pattern in product((0, 1), repeat=k):
        m = sympy_solve_integer(matrix, list(pattern))
        if m is not None:
            achievable[pattern] = m
    singletons = {}
    for i in range(k):
        pattern = tuple(1 if j == i else 0 for j in range(k))
        if pattern not in achievable:
            return False
        singletons[i] = achievable[pattern]
    entries = [(cone.weight_class(singletons[i]), RationalSubspace.span(n, [rays[i]]))
               for i in range(k)]
    ray_span = RationalSubspace.span(n, rays)
    if ray_span.dim < n:
        entries.append((cone.weight_class((0,) * n), ray_span.orthogonal_complement()))
    cert = DecompositionCertificate(cone, entries)
    return verify_certificate(cone, tangent_family(cone), cert)


def fraction_rank(rows: list[list[int]]) -> int:
    """Rank over Q by plain fraction Gaussian elimination."""
    work = [[Fraction(c) for c in row] for row in rows]
    rank = 0
    cols = len(work[0]) if work else 0
    for col in range(cols):
        pivot = next((i for i in range(rank, len(work)) if work[i][col]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = work[rank][col]
        work[rank] = [c / inv for c in work[rank]]
        for i in range(len(work)):
            if i != rank and work[i][col]:
                coeff = work[i][col]
                work[i] = [a - coeff * b for a, b in zip(work[i], work[rank])]
        rank += 1
    return rank


def cone_membership_by_duality(cone: Cone, v: tuple[int, ...]) -> bool:
    """Membership decided from scratch: nonnegative pairing with every dual generator."""
    return all(sum(a * b for a, b in zip(d, v)) >= 0 for d in cone.dual.generators)
