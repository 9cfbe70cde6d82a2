import os

from hypothesis import HealthCheck, settings

# deterministic by default; HYPOTHESIS_SEED=<n> switches to a seeded random run
_seed = os.environ.get("HYPOTHESIS_SEED")
settings.register_profile(
    "default",
    derandomize=_seed is None,
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def pytest_configure(config):
    if _seed is not None:
        import random

        random.seed(int(_seed))
