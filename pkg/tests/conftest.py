import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from imtw import kernels
from imtw.graph import build_graph

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

BACKENDS = ["python"] + (["cython"] if kernels.HAVE_COMPILED else [])


@pytest.fixture(params=BACKENDS)
def each_backend(request):
    with kernels.use_backend(request.param):
        yield request.param


@st.composite
def graphs(draw, min_n=0, max_n=8, p=None):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if p is None:
        chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    else:
        seed = draw(st.integers(0, 2**32 - 1))
        rng = random.Random(seed)
        chosen = [e for e in pairs if rng.random() < p]
    return build_graph(n, chosen)


@st.composite
def graph_and_order(draw, min_n=1, max_n=8):
    G = draw(graphs(min_n, max_n))
    order = draw(st.permutations(list(range(G.n))))
    return G, list(order)


def random_graph(rng, n, p):
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
