import numpy as np

DATA_STREAM = 0


def estimator_stream(estimator_ind: int) -> int:
    """Return the stream number of the estimator at position estimator_ind."""
    return 1 + estimator_ind


def replicate_rng(master_seed: int, replicate: int,
                  stream: int = DATA_STREAM) -> np.random.Generator:
    """Return the random generator of one (replicate, stream) pair.

    Streams are derived from the master seed with a counter-based bit
    generator, so a replicate's draws do not depend on which other replicates
    ran or in what order. Stream 0 generates the data and stream 1 + j feeds
    estimator j.
    """
    seed_seq = np.random.SeedSequence(
        master_seed, spawn_key=(replicate, stream))
    return np.random.Generator(np.random.Philox(seed_seq))
