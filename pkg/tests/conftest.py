import json
import random

import pytest

from app.main import main
from app.utils.logging import set_level


@pytest.fixture(autouse=True)
def quiet_logs():
    set_level("ERROR")


@pytest.fixture
def rng():
    return random.Random(20240511)


@pytest.fixture
def cli(capsys):
    """Run the command line; returns (exit code, stdout, parsed JSON or None)."""

    def run(*argv):
        code = main(list(argv))
        out = capsys.readouterr().out
        payload = None
        if "--json" in argv:
            payload = json.loads(out)
        return code, out, payload

    return run
