"""Cross-check that the smoothness and local-freeness deciders agree.

The two verdicts are computed by disjoint code paths (lattice normal forms
on one side, filtration certificates on the other); equality of the two on
every strongly convex cone is the statement the sweep machinery exercises
at scale.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable

from .cones import Cone
from .klyachko import LocalFreenessReport, decide_tangent_locally_free
from .smoothness import SmoothnessReport, is_smooth_cone


@dataclass(frozen=True)
class AgreementRecord:
    """Both verdicts on one cone and whether they coincide."""

    cone: Cone
    smooth: SmoothnessReport
    locally_free: LocalFreenessReport
    agree: bool


@dataclass(frozen=True)
class SweepSummary:
    """Aggregate outcome of an agreement sweep over a cone corpus."""

    count: int
    agreements: int
    disagreements: tuple[AgreementRecord, ...]
    smooth_count: int
    elapsed_seconds: float

    @property
    def all_agree(self) -> bool:
        return not self.disagreements


def check_zariski_lipman(cone: Cone) -> AgreementRecord:
    """Run both deciders on one cone and record whether they agree."""
    smooth = is_smooth_cone(cone)
    free = decide_tangent_locally_free(cone)
    return AgreementRecord(cone, smooth, free, smooth.verdict == free.verdict)


def sweep(cones: Iterable[Cone]) -> SweepSummary:
    """Check agreement over a corpus; disagreements are collected, not raised.

    A nonempty disagreement list is a test failure for the caller to
    surface, since no strongly convex cone can have differing verdicts.
    """
    start = time.perf_counter()
    count = 0
    agreements = 0
    smooth_count = 0
    disagreements: list[AgreementRecord] = []
    for cone in cones:
        record = check_zariski_lipman(cone)
        count += 1
        if record.agree:
            agreements += 1
        else:
            disagreements.append(record)
        if record.smooth.verdict:
            smooth_count += 1
    disagreements.sort(key=lambda r: r.cone.sort_key())
    return SweepSummary(
        count=count,
        agreements=agreements,
        disagreements=tuple(disagreements),
        smooth_count=smooth_count,
        elapsed_seconds=time.perf_counter() - start,
    )
