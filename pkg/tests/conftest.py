from dataclasses import dataclass

import pytest
from hypothesis import settings

from linarr import syzygy
from linarr.arrangement import Arrangement, MultiplicityProfile, profile, random_arrangement
from linarr.classify import ClassificationReport, report_from_analysis

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

SUITE_SIZE = 120
SUITE_DEGREES = range(3, 9)


@dataclass
class SuiteItem:
    seed: str
    arrangement: Arrangement
    profile: MultiplicityProfile
    analysis: syzygy.SyzygyAnalysis
    report: ClassificationReport | None
    error: Exception | None


def suite_arrangements(n=SUITE_SIZE):
    degrees = list(SUITE_DEGREES)
    for i in range(n):
        d = degrees[i % len(degrees)]
        seed = f"suite:{i}"
        yield seed, random_arrangement(d, seed, coeff_bound=3)


@pytest.fixture(scope="session")
def random_suite():
    """Seeded random arrangements with 3 <= d <= 8, analyzed once per session."""
    items = []
    for seed, a in suite_arrangements():
        an = syzygy.analyze(a)
        try:
            rep, err = report_from_analysis(an), None
        except Exception as exc:  # recorded, asserted on by the tests
            rep, err = None, exc
        items.append(SuiteItem(seed, a, profile(a), an, rep, err))
    return items


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def record_criterion():
    def record(number: int, passed: bool, detail: str):
        line = f"acceptance criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
