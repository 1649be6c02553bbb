"""Synthetic labeled-data generators for the drifting concept families.

Three families of binary-classification concepts:

* ``sine``   (2 concepts, d=2): points uniform on [0,1]^2, class 1 iff
  x2 < sin(x1); concept 1 swaps the labels.
* ``circle`` (2 concepts, d=2): points uniform on [0,1]^2, class 1 iff the
  point lies inside the concept's circle (concept 0: center (0.2, 0.5),
  radius 0.15; concept 1: center (0.6, 0.5), radius 0.25).
* ``sea``    (4 concepts, d=3): points uniform on [0,10]^3, clean class 1 iff
  x1 + x2 <= theta (9, 8, 7, 9.5 for concepts 0..3; x3 is uncorrelated with
  the label), then each label flipped independently with probability 0.10.

Class 1 always means "inside the region / below the boundary".  Generators
are pure functions of (concept, n, rng): same stream, same batch.
"""

from dataclasses import dataclass

import numpy as np

from driftfed.errors import ConfigError, EmptyDataError

NUM_CONCEPTS = {"sine": 2, "circle": 2, "sea": 4}
FEATURE_DIM = {"sine": 2, "circle": 2, "sea": 3}

_CIRCLES = ((0.2, 0.5, 0.15), (0.6, 0.5, 0.25))
_SEA_THRESHOLDS = (9.0, 8.0, 7.0, 9.5)
SEA_NOISE = 0.10


@dataclass
class SampleBatch:
    """Labeled data arriving at one client at one time step."""

    X: np.ndarray  # (n, d) float64
    y: np.ndarray  # (n,) int64 in {0, 1}
    client: int = -1
    time: int = -1

    def __post_init__(self) -> None:
        self.X = np.ascontiguousarray(self.X, dtype=np.float64)
        self.y = np.ascontiguousarray(self.y, dtype=np.int64)
        if self.X.shape[0] != self.y.shape[0]:
            raise ValueError(f"features/labels length mismatch: {self.X.shape[0]} vs {self.y.shape[0]}")
        if self.X.shape[0] == 0:
            raise EmptyDataError("empty sample batch")

    def __len__(self) -> int:
        return self.X.shape[0]


def _check_concept(family: str, concept: int) -> None:
    if family not in NUM_CONCEPTS:
        raise ConfigError(f"unknown dataset family {family!r}")
    if not 0 <= concept < NUM_CONCEPTS[family]:
        raise ConfigError(f"{family} defines concepts 0..{NUM_CONCEPTS[family] - 1}, got {concept}")


def gen_sine(concept: int, n: int, rng: np.random.Generator, client: int = -1, time: int = -1) -> SampleBatch:
    """Sine-boundary concept: class 1 iff x2 < sin(x1); concept 1 swaps labels."""
    _check_concept("sine", concept)
    if n <= 0:
        raise ConfigError(f"batch size must be positive, got {n}")
    X = rng.uniform(0.0, 1.0, size=(n, 2))
    below = X[:, 1] < np.sin(X[:, 0])
    y = below if concept == 0 else ~below
    return SampleBatch(X, y.astype(np.int64), client, time)


def gen_circle(concept: int, n: int, rng: np.random.Generator, client: int = -1, time: int = -1) -> SampleBatch:
    """Circle concept: class 1 iff the point lies inside the concept's circle."""
    _check_concept("circle", concept)
    if n <= 0:
        raise ConfigError(f"batch size must be positive, got {n}")
    cx, cy, r = _CIRCLES[concept]
    X = rng.uniform(0.0, 1.0, size=(n, 2))
    inside = (X[:, 0] - cx) ** 2 + (X[:, 1] - cy) ** 2 < r**2
    return SampleBatch(X, inside.astype(np.int64), client, time)


def gen_sea(
    concept: int,
    n: int,
    rng: np.random.Generator,
    client: int = -1,
    time: int = -1,
    noise: float = SEA_NOISE,
) -> SampleBatch:
    """Shifted-hyperplane concept: clean class 1 iff x1 + x2 <= theta, then
    each label flipped independently with probability ``noise``."""
    _check_concept("sea", concept)
    if n <= 0:
        raise ConfigError(f"batch size must be positive, got {n}")
    theta = _SEA_THRESHOLDS[concept]
    X = rng.uniform(0.0, 10.0, size=(n, 3))
    y = (X[:, 0] + X[:, 1] <= theta).astype(np.int64)
    if noise > 0.0:
        flip = rng.random(n) < noise
        y = np.where(flip, 1 - y, y)
    return SampleBatch(X, y, client, time)


_GENERATORS = {"sine": gen_sine, "circle": gen_circle, "sea": gen_sea}


def generate_batch(
    family: str, concept: int, n: int, rng: np.random.Generator, client: int = -1, time: int = -1
) -> SampleBatch:
    """Dispatch to the family's generator."""
    if family not in _GENERATORS:
        raise ConfigError(f"unknown dataset family {family!r}")
    return _GENERATORS[family](concept, n, rng, client, time)
