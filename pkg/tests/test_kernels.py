import os
import subprocess
import sys

import pytest
from hypothesis import given, strategies as hs

from decconn import _kernels_py as py, kernels
from decconn.graph import csr

from .conftest import digraphs

needs_compiled = pytest.mark.skipif(kernels.compiled_impl is None, reason="extension not built")


@needs_compiled
@given(digraphs(max_n=14, max_m=50), hs.data())
def test_compiled_scc_matches_fallback(g, data):
    offs, tgts = csr(g)
    x = data.draw(hs.integers(0, g.n))
    assert kernels.compiled_impl.scc_labels(g.n, offs, tgts, x) == py.scc_labels(g.n, offs, tgts, x)


@needs_compiled
@given(digraphs(max_n=14, max_m=50), hs.data())
def test_compiled_reach_matches_fallback(g, data):
    offs, tgts = csr(g)
    s = data.draw(hs.integers(1, g.n))
    x = data.draw(hs.integers(0, g.n))
    want = py.count_reachable(g.n, offs, tgts, s, x)
    assert kernels.compiled_impl.count_reachable(g.n, offs, tgts, s, x) == want


def test_labels_are_dense_and_skip_removed():
    lab = py.scc_labels(3, [0, 0, 1, 2, 3], [2, 3, 1], 2)
    assert lab[0] == -1 and lab[2] == -1
    assert sorted(lab[1:]) == [-1, 0, 1]


def test_env_switch_forces_fallback():
    code = "from decconn import kernels; print(kernels.BACKEND)"
    env = dict(os.environ, DECCONN_PURE="1")
    r = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, env=env)
    assert r.stdout.strip() == "python"
