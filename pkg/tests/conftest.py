"""Shared session fixtures.

The whole invariant chain is built once per session into a throwaway cache
directory; everything downstream (generator set, rank oracles) hangs off it.
Building the chain from scratch takes a few seconds with the compiled kernel.
"""

import pytest
from hypothesis import settings

from rootwald import gradedring as gr
from rootwald.cache import InvariantStore

settings.register_profile("rootwald", deadline=None)
settings.load_profile("rootwald")


@pytest.fixture(scope="session")
def cache_dir(tmp_path_factory):
    return tmp_path_factory.mktemp("rootwald-cache")


@pytest.fixture(scope="session")
def store(cache_dir):
    return InvariantStore(cache_dir)


@pytest.fixture(scope="session")
def h4_group(store):
    return store.group("H4")


@pytest.fixture(scope="session")
def f4_group(store):
    return store.group("F4")


@pytest.fixture(scope="session")
def chain(store, h4_group):
    inv = store.fundamentals(h4_group)
    der = store.derived(inv)
    stab = store.stabilizer_invariants(inv, der)
    return h4_group, inv, der, stab


@pytest.fixture(scope="session")
def gens(chain):
    _, inv, der, stab = chain
    return gr.build_generator_set(inv, der, stab)


@pytest.fixture(scope="session")
def oracle(chain):
    return gr.TruncationOracle(chain[1])


@pytest.fixture(scope="session")
def algebra(gens):
    return gr.GeneratorAlgebraOracle(gens)
