from pathlib import Path

import numpy as np
import pytest

from satenhance import load_image

DATA = Path(__file__).parent / "data"
CORPUS = DATA / "corpus"
CORPUS_NAMES = ("astronaut", "camera", "gravel", "moon")


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture(scope="session")
def corpus():
    return {name: load_image(CORPUS / f"{name}.png") for name in CORPUS_NAMES}


@pytest.fixture(scope="session")
def data_dir():
    return DATA


# one summary line per acceptance criterion --------------------------------

_ACCEPTANCE = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        detail = dict(item.user_properties).get("detail", "")
        _ACCEPTANCE.append((marker.args[0], rep.outcome, item.name, detail))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for cid, outcome, name, detail in sorted(_ACCEPTANCE, key=lambda r: (int(r[0].rstrip("abc")), r[0])):
        status = "PASS" if outcome == "passed" else "FAIL"
        line = f"[{status}] C{cid:<3} {name}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
