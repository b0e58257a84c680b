import pytest
from hypothesis import settings

from supercyclic import enumerate_bigraphs

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def corpus_3_5():
    return list(enumerate_bigraphs(3, 5))


@pytest.fixture(scope="session")
def corpus_4_5():
    return list(enumerate_bigraphs(4, 5))


@pytest.fixture(scope="session")
def corpus_4_6():
    return list(enumerate_bigraphs(4, 6))
