import pytest

from nilgraph.harness import BaseAnalysis, builtin_corpus


@pytest.fixture(scope="session")
def corpus():
    return builtin_corpus()


@pytest.fixture(scope="session")
def corpus_by_name(corpus):
    return {e.name: e for e in corpus}


@pytest.fixture(scope="session")
def analyses(corpus):
    return {e.name: BaseAnalysis.of(e.ring) for e in corpus}


@pytest.fixture(scope="session")
def all_specs(corpus):
    return {spec.label: spec for entry in corpus for spec in entry.specs}
