from __future__ import annotations

import time

import pytest

from centaut.groupio import default_corpus, resolve_source
from centaut.harness import run_verification
from centaut.structure import structure_report


@pytest.fixture(scope="session")
def corpus():
    """name -> (source string, expected verdict or None)."""
    return {e.name: (e.source, e.expected) for e in default_corpus().entries}


@pytest.fixture(scope="session")
def corpus_groups(corpus):
    return {name: resolve_source(src) for name, (src, _) in corpus.items()}


@pytest.fixture(scope="session")
def corpus_structures(corpus_groups):
    return {name: structure_report(g) for name, g in corpus_groups.items()}


@pytest.fixture(scope="session")
def corpus_run():
    """One full verification sweep, shared by every test that needs records."""
    t0 = time.perf_counter()
    report = run_verification(default_corpus(), jobs=2)
    return report, time.perf_counter() - t0
