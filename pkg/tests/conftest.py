import sys
from importlib.resources import files

import pytest

from classex.kernel import load_proof_file

CORPUS_DIR = files("classex") / "corpus"
CORPUS_NAMES = sorted(p.name[:-4] for p in CORPUS_DIR.iterdir() if p.name.endswith(".prf"))
PI2_NAMES = ["exists_via_dne", "explicit_term", "lafont", "lem_split", "succ", "zero_left"]


def corpus(name):
    return load_proof_file(CORPUS_DIR / f"{name}.prf")


@pytest.fixture(scope="session")
def all_corpus():
    return {n: corpus(n) for n in CORPUS_NAMES}


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
