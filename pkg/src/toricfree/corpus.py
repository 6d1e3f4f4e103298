"""Deterministic cone generation and the named example library.

Random cones come from rejection sampling with Python's Mersenne Twister
(`random.Random`), which is reproducible across platforms and versions;
the algorithm identifier below travels with every report so a sweep can
be replayed from its seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import islice
from typing import Iterator, Union

from .cones import Cone, NotStronglyConvexError
from .fans import Fan

PRNG_ALGORITHM = "python-random-mt19937"

REJECTION_LIMIT = 10_000


class GenerationBudgetError(RuntimeError):
    """Raised when rejection sampling exhausts its attempt budget."""


@dataclass(frozen=True)
class GeneratorConfig:
    """Parameters for the random cone stream.

    Coordinates are drawn uniformly from [-bound, bound]; the generator
    count is drawn uniformly from [min_generators, max_generators]; draws
    containing the zero vector or spanning a line are rejected whole.
    """

    rank: int
    min_generators: int
    max_generators: int
    bound: int
    seed: int

    def __post_init__(self):
        if not 2 <= self.rank <= 6:
            raise ValueError(f"rank {self.rank} outside the supported range 2..6")
        if self.min_generators < 0 or self.min_generators > self.max_generators:
            raise ValueError("generator count range is empty or negative")
        if self.bound < 1:
            raise ValueError("coordinate bound must be at least 1")


def default_config(rank: int, seed: int, bound: int = 5) -> GeneratorConfig:
    """Generator counts 1 through rank+2: a healthy mix of dimensions."""
    return GeneratorConfig(rank=rank, min_generators=1,
                           max_generators=rank + 2, bound=bound, seed=seed)


def iter_random_cones(config: GeneratorConfig) -> Iterator[Cone]:
    """Endless reproducible stream of strongly convex cones."""
    rng = random.Random(config.seed)
    while True:
        yield _draw_cone(rng, config)


def random_cone(config: GeneratorConfig) -> Cone:
    """First cone of the stream for this config."""
    return next(iter_random_cones(config))


def sample_cones(config: GeneratorConfig, count: int) -> list[Cone]:
    return list(islice(iter_random_cones(config), count))


def _draw_cone(rng: random.Random, config: GeneratorConfig) -> Cone:
    for _ in range(REJECTION_LIMIT):
        k = rng.randint(config.min_generators, config.max_generators)
        gens = [[rng.randint(-config.bound, config.bound) for _ in range(config.rank)]
                for _ in range(k)]
        if any(all(c == 0 for c in g) for g in gens):
            continue
        try:
            return Cone(gens, config.rank)
        except NotStronglyConvexError:
            continue
    raise GenerationBudgetError(
        f"no strongly convex cone found in {REJECTION_LIMIT} attempts for {config}")


@dataclass(frozen=True)
class NamedExample:
    """A library cone or fan with its expected verdict pair."""

    name: str
    geometry: Union[Cone, Fan]
    smooth: bool
    locally_free: bool


def _projective_plane_fan() -> Fan:
    return Fan([
        Cone([(1, 0), (0, 1)], 2),
        Cone([(0, 1), (-1, -1)], 2),
        Cone([(-1, -1), (1, 0)], 2),
    ], 2)


def _p1_times_p1_fan() -> Fan:
    return Fan([
        Cone([(1, 0), (0, 1)], 2),
        Cone([(0, 1), (-1, 0)], 2),
        Cone([(-1, 0), (0, -1)], 2),
        Cone([(0, -1), (1, 0)], 2),
    ], 2)


def _weighted_p112_fan() -> Fan:
    return Fan([
        Cone([(1, 0), (0, 1)], 2),
        Cone([(0, 1), (-1, -2)], 2),
        Cone([(-1, -2), (1, 0)], 2),
    ], 2)


def named_examples() -> tuple[NamedExample, ...]:
    """The regression corpus with hand-checked verdicts."""
    examples = [
        NamedExample("zero", Cone.zero(2), True, True),
        NamedExample("ray-e1", Cone([(1, 0)], 2), True, True),
        NamedExample("ray-12", Cone([(1, 2)], 2), True, True),
        NamedExample("ray-112", Cone([(1, 1, 2)], 3), True, True),
        NamedExample("orthant2", Cone([(1, 0), (0, 1)], 2), True, True),
        NamedExample("orthant3", Cone([(1, 0, 0), (0, 1, 0), (0, 0, 1)], 3), True, True),
        NamedExample("conifold", Cone([(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)], 3),
                     False, False),
        NamedExample("P2", _projective_plane_fan(), True, True),
        NamedExample("P1xP1", _p1_times_p1_fan(), True, True),
        NamedExample("P112", _weighted_p112_fan(), False, False),
    ]
    for k in range(1, 6):
        examples.append(NamedExample(
            f"A{k}", Cone([(1, 0), (1, k + 1)], 2), False, False))
    examples.sort(key=lambda e: e.name)
    return tuple(examples)


def lookup(name: str) -> NamedExample:
    for example in named_examples():
        if example.name == name:
            return example
    raise KeyError(f"no named example {name!r}")
