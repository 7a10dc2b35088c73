from hypothesis import HealthCheck, settings

import pytest

settings.register_profile(
    "default",
    derandomize=True,
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def weyl2():
    from lieprefrat.corpus import truncated_weyl_algebra

    return truncated_weyl_algebra(2)


@pytest.fixture(scope="session")
def heis2():
    from lieprefrat.corpus import heisenberg_algebra

    return heisenberg_algebra(2)


@pytest.fixture(scope="session")
def affine2():
    from lieprefrat.corpus import affine_line_algebra

    return affine_line_algebra(2)
