import sys
from pathlib import Path

import pytest

# allow running the suite from a source checkout without installing
SRC = Path(__file__).resolve().parent.parent / "src"
if str(SRC) not in sys.path:
    try:
        import twistpost  # noqa: F401
    except ImportError:
        sys.path.insert(0, str(SRC))

from twistpost import corpus as corpus_mod  # noqa: E402
from twistpost.groups import cyclic, klein_four, symmetric  # noqa: E402


@pytest.fixture(scope="session")
def z2():
    return cyclic(2)


@pytest.fixture(scope="session")
def z3():
    return cyclic(3)


@pytest.fixture(scope="session")
def z4():
    return cyclic(4)


@pytest.fixture(scope="session")
def k4():
    return klein_four()


@pytest.fixture(scope="session")
def s3():
    return symmetric(3)


@pytest.fixture(scope="session")
def corpus():
    return corpus_mod.corpus()


@pytest.fixture(scope="session")
def corpus_twisted():
    return corpus_mod.corpus_left_twisted()


@pytest.fixture(scope="session")
def corpus_trusses():
    return corpus_mod.corpus_trusses()
