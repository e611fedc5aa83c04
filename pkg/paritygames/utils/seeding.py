import numpy as np


def derived_seed_sequence(seed: int, *key: int) -> np.random.SeedSequence:
    """
    The single seed-mixing function of the package: the stream for ``key``
    under ``seed`` is ``SeedSequence(entropy=seed, spawn_key=key)``. Streams
    for different keys are statistically independent, and a stream depends
    only on ``(seed, key)``, never on the order in which streams are made.
    """
    return np.random.SeedSequence(entropy=seed, spawn_key=tuple(int(k) for k in key))


def derived_rng(seed: int, *key: int) -> np.random.Generator:
    return np.random.default_rng(derived_seed_sequence(seed, *key))
