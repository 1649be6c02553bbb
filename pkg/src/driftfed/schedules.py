"""Drift schedules: which concept each client draws from at each time step.

A schedule is a P x T grid of concept ids (clients as rows, times as columns,
time is 1-based in the API).  It is the ground truth that the clustering
policies try to recover, and the oracle policy's input.

Serialized form is a plain-text grid, one row per client, space-separated
concept ids, so experiments can pin exact drift patterns in config.
"""

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from driftfed.datasets import NUM_CONCEPTS
from driftfed.errors import ConfigError


@dataclass
class DriftSchedule:
    """Concept assignment for every (client, time) cell."""

    family: str
    cells: np.ndarray  # (P, T) int64, concept ids

    def __post_init__(self) -> None:
        self.cells = np.asarray(self.cells, dtype=np.int64)
        if self.cells.ndim != 2 or self.cells.size == 0:
            raise ConfigError("schedule must be a nonempty 2-D grid")
        k = NUM_CONCEPTS.get(self.family)
        if k is None:
            raise ConfigError(f"unknown dataset family {self.family!r}")
        if self.cells.min() < 0 or self.cells.max() >= k:
            raise ConfigError(f"schedule contains concept ids outside 0..{k - 1}")

    @property
    def num_clients(self) -> int:
        return self.cells.shape[0]

    @property
    def num_steps(self) -> int:
        return self.cells.shape[1]

    def concept(self, client: int, time: int) -> int:
        """Concept of ``client`` at 1-based ``time``; times past T clamp to T
        (the extra final-test batch repeats the last concept)."""
        t = min(time, self.num_steps)
        return int(self.cells[client, t - 1])

    def drift_mask(self) -> np.ndarray:
        """Boolean (P, T) grid: cell (c, t) is True iff the client's concept
        changes entering t+1 (no drift can enter the extra final-test batch)."""
        mask = np.zeros_like(self.cells, dtype=bool)
        mask[:, :-1] = self.cells[:, 1:] != self.cells[:, :-1]
        return mask


def schedule_staggered_2(P: int, T: int, start: int, end: int, family: str = "sine") -> DriftSchedule:
    """All clients begin on concept 0 and switch to concept 1 at evenly
    staggered times spanning [start, end]: client c switches at
    start + floor(c * (end - start + 1) / P).

    With P=10, T=10, start=4, end=8 two clients switch per step at t=4..8.
    """
    if start > end:
        raise ConfigError(f"stagger start {start} > end {end}")
    if not (1 <= start and end <= T):
        raise ConfigError(f"stagger window [{start}, {end}] outside 1..{T}")
    cells = np.zeros((P, T), dtype=np.int64)
    span = end - start + 1
    for c in range(P):
        switch = start + (c * span) // P
        cells[c, switch - 1 :] = 1
    return DriftSchedule(family, cells)


# Canonical 10x10 four-concept pattern.  Times 1-2 start on a single concept;
# concepts 1 and 2 emerge simultaneously at t=3 on disjoint client subsets,
# concept 3 emerges at t=4, and concept 0 recurs at t=7 and t=9.  Each
# client's own sequence follows the cyclic order 0 -> 1 -> 2 -> 3 -> 0.
_FOURCONCEPT_CANONICAL = np.array(
    [
        [0, 0, 1, 1, 1, 2, 2, 2, 3, 3],
        [0, 0, 1, 1, 1, 2, 2, 2, 3, 3],
        [0, 0, 1, 1, 1, 2, 2, 2, 3, 3],
        [0, 0, 2, 2, 2, 3, 3, 3, 0, 0],
        [0, 0, 2, 2, 2, 3, 3, 3, 0, 0],
        [0, 0, 2, 2, 2, 3, 3, 3, 0, 0],
        [0, 0, 0, 3, 3, 3, 0, 0, 1, 1],
        [0, 0, 0, 3, 3, 3, 0, 0, 1, 1],
        [0, 0, 0, 3, 3, 3, 0, 0, 1, 1],
        [0, 0, 0, 0, 0, 0, 1, 1, 2, 2],
    ],
    dtype=np.int64,
)


def schedule_4concept(P: int = 10, T: int = 10, family: str = "sea") -> DriftSchedule:
    """The canonical four-concept pattern; other sizes sample the canonical
    10x10 grid proportionally (indices clamped)."""
    if P <= 0 or T <= 0:
        raise ConfigError("P and T must be positive")
    rows = np.minimum((np.arange(P) * 10) // P, 9)
    cols = np.minimum((np.arange(T) * 10) // T, 9)
    cells = _FOURCONCEPT_CANONICAL[np.ix_(rows, cols)]
    return DriftSchedule(family, cells)


def schedule_random(P: int, T: int, k: int, rng: np.random.Generator, family: str = "sea") -> DriftSchedule:
    """All clients on concept 0 for t=1,2; afterwards each client
    independently draws a concept uniformly from 0..k-1 every two steps."""
    if T < 1:
        raise ConfigError("T must be at least 1")
    if not 1 <= k <= NUM_CONCEPTS[family]:
        raise ConfigError(f"{family} defines {NUM_CONCEPTS[family]} concepts, requested {k}")
    cells = np.zeros((P, T), dtype=np.int64)
    for block_start in range(2, T, 2):
        draws = rng.integers(0, k, size=P)
        width = min(2, T - block_start)
        cells[:, block_start : block_start + width] = draws[:, None]
    return DriftSchedule(family, cells)


def save_schedule(schedule: DriftSchedule, path: str | Path) -> None:
    """Write the plain-text grid: a family header line then one row per client."""
    lines = [f"family {schedule.family}"]
    lines += [" ".join(str(v) for v in row) for row in schedule.cells]
    Path(path).write_text("\n".join(lines) + "\n")


def load_schedule(path: str | Path) -> DriftSchedule:
    """Read a schedule written by :func:`save_schedule`."""
    text = Path(path).read_text().strip()
    if not text:
        raise ConfigError(f"empty schedule file: {path}")
    lines = text.splitlines()
    first = lines[0].split()
    if first[0] == "family":
        family = first[1]
        lines = lines[1:]
    else:
        raise ConfigError(f"schedule file missing 'family' header: {path}")
    rows = [[int(v) for v in line.split()] for line in lines if line.strip()]
    widths = {len(r) for r in rows}
    if len(widths) != 1:
        raise ConfigError(f"ragged schedule rows in {path}")
    return DriftSchedule(family, np.array(rows, dtype=np.int64))
