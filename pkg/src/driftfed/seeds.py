"""Deterministic stream derivation from a single root seed.

Every random draw in a run comes from a named stream derived as
``SeedSequence([root_seed, PURPOSE, *path])``.  Streams are independent of
each other and of the order in which they are created, so concurrent workers
can own their own stream and the whole run stays reproducible bit-for-bit.

Purpose tags (fixed; changing them changes every result):
    DATA      per (client, time) batch generation
    INIT      per model-id parameter initialization
    SAMPLE    per (time, round, model, client) minibatch index draws
    TIE       per (time, client) argmin tie breaking
    SUBSAMPLE per (time, model) loss-matrix column subsampling
    PROMOTE   per time step, promotion choice among drift detectors
"""

import numpy as np

DATA = 0
INIT = 1
SAMPLE = 2
TIE = 3
SUBSAMPLE = 4
PROMOTE = 5


def stream(root_seed: int, *path: int) -> np.random.Generator:
    """Return the generator for the stream named by ``path`` under ``root_seed``."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([root_seed, *path])))
