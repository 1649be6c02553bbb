"""Federated averaging with time-varying client clustering under concept drift.

A desk-scale, fully deterministic simulator: synthetic drifting data streams,
multi-model federated training, drift-reactive clustering policies, and a
test-then-train evaluation harness.
"""

from driftfed.datasets import SampleBatch, gen_circle, gen_sea, gen_sine, generate_batch
from driftfed.schedules import (
    DriftSchedule,
    load_schedule,
    save_schedule,
    schedule_4concept,
    schedule_random,
    schedule_staggered_2,
)
from driftfed.mlp import ModelParams, TrainConfig, init_model, forward, mean_loss, local_update
from driftfed.harness import ExperimentConfig, ResultGrid, average_accuracy, run_experiment, run_trials

__version__ = "0.1.0"

__all__ = [
    "SampleBatch",
    "gen_sine",
    "gen_circle",
    "gen_sea",
    "generate_batch",
    "DriftSchedule",
    "schedule_staggered_2",
    "schedule_4concept",
    "schedule_random",
    "load_schedule",
    "save_schedule",
    "ModelParams",
    "TrainConfig",
    "init_model",
    "forward",
    "mean_loss",
    "local_update",
    "ExperimentConfig",
    "ResultGrid",
    "run_experiment",
    "run_trials",
    "average_accuracy",
]
