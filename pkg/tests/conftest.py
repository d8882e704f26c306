import os
import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow], derandomize=True
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def random_poly_coeffs(rng: random.Random, deg: int, bound: int = 9) -> list[Fraction]:
    out = [Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(deg)]
    lead = 0
    while lead == 0:
        lead = rng.randint(-bound, bound)
    return out + [Fraction(lead, rng.randint(1, bound))]


@pytest.fixture
def rng():
    return random.Random(20241019)


# one summary line per acceptance criterion, printed after the run
CRITERIA: list[str] = []


def record_criterion(line: str) -> None:
    CRITERIA.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in CRITERIA:
            terminalreporter.write_line(line)
