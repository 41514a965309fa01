import random
import string
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

DATA = Path(__file__).parent / "data"

ACCEPTANCE_LOG: list[str] = []


@pytest.fixture
def data_dir():
    return DATA


def random_fqdn(rng: random.Random, max_len: int = 64, alphabet: str = string.ascii_lowercase + string.digits + "-_") -> str:
    """A random valid (lenient) name no longer than ``max_len``."""
    target = rng.randint(1, max_len)
    labels = []
    used = 0
    while used < target:
        room = target - used - (1 if labels else 0)
        if room < 1:
            break
        n = rng.randint(1, min(room, 63))
        labels.append("".join(rng.choice(alphabet) for _ in range(n)))
        used += n + (1 if len(labels) > 1 else 0)
    return ".".join(labels)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LOG:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LOG:
            terminalreporter.write_line(line)
