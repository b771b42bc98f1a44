import dataclasses
from functools import lru_cache

import pytest

from dce import AttackScenario, ExperimentSpec, SystemConfig, run_experiment

MASTER_SEED = 20240


@pytest.fixture(scope="session")
def cfg():
    return SystemConfig()


@lru_cache(maxsize=None)
def cached_rows(scheme, attack_mode, p0_bar, snr_db_grid, gamma, trials, seed=MASTER_SEED, workers=1):
    """Shared Monte Carlo runs so acceptance criteria reuse identical sweeps."""
    spec = ExperimentSpec(
        cfg=SystemConfig(),
        scheme=scheme,
        attack=AttackScenario(attack_mode, p0_bar),
        snr_db_grid=snr_db_grid,
        gamma=gamma,
        trials=trials,
        master_seed=seed,
    )
    return run_experiment(spec, workers=workers)


def make_cfg(**kw):
    return dataclasses.replace(SystemConfig(), **kw)
