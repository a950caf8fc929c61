import os
import random
import subprocess
import sys

import pytest

from imtw import _pykernel, kernels
from imtw.kernels import ALPHA, MU, make_kernel

from .conftest import random_graph

needs_compiled = pytest.mark.skipif(not kernels.HAVE_COMPILED, reason="compiled kernel not built")


def cases(seed=1, count=60, max_n=14):
    rng = random.Random(seed)
    for _ in range(count):
        yield random_graph(rng, rng.randint(0, max_n), rng.choice([0.2, 0.4, 0.6])), rng


@needs_compiled
class TestCompiledMatchesPython:
    def test_mis(self):
        for G, rng in cases():
            py, cy = make_kernel(G.n, G.adj, "python"), make_kernel(G.n, G.adj, "cython")
            for _ in range(5):
                mask = rng.getrandbits(G.n) if G.n else 0
                assert py.mis_size(mask) == cy.mis_size(mask)

    def test_touching(self):
        for G, rng in cases(2):
            py, cy = make_kernel(G.n, G.adj, "python"), make_kernel(G.n, G.adj, "cython")
            for _ in range(4):
                mask = rng.getrandbits(G.n) if G.n else 0
                assert py.im_touching(mask) == cy.im_touching(mask)
                assert py.touching_edges(mask) == cy.touching_edges(mask)

    def test_order_search(self):
        for G, rng in cases(3, 30, 8):
            py, cy = make_kernel(G.n, G.adj, "python"), make_kernel(G.n, G.adj, "cython")
            for param in (ALPHA, MU):
                assert py.order_search(param) == cy.order_search(param)
                first = 1 << rng.randrange(G.n) if G.n else None
                assert py.order_search(param, first) == cy.order_search(param, first)

    def test_order_search_cap(self):
        G = random_graph(random.Random(0), 13, 0.3)
        with pytest.raises(ValueError):
            make_kernel(G.n, G.adj, "cython").order_search(ALPHA)


class TestSelection:
    def test_python_forced(self):
        with kernels.use_backend("python"):
            assert isinstance(make_kernel(3, [0, 0, 0]), _pykernel.BitGraph)

    def test_wide_graph_falls_back(self):
        k = make_kernel(70, [0] * 70, "cython")
        assert k.backend == "python"
        assert k.mis_size((1 << 70) - 1) == 70

    def test_unknown_backend(self):
        with pytest.raises(ValueError):
            kernels.set_backend("fortran")

    def test_environment_override(self):
        code = "from imtw import kernels; print(kernels.backend())"
        env = dict(os.environ, IMTW_BACKEND="python")
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        assert out.stdout.strip() == "python"
