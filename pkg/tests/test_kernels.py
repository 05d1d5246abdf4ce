from __future__ import annotations

import itertools
import os
import random
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thickness_lab import _kernels
from thickness_lab.construction import build_decomposition
from thickness_lab.graph import complete_graph, kn_pm

needs_ext = pytest.mark.skipif(_kernels.compiled_is_planar_edges is None, reason="extension not built")


@st.composite
def edge_sets(draw, max_n: int = 12):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    return n, draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []


def test_backend_name():
    assert _kernels.BACKEND in ("cython", "python")
    if os.environ.get("THICKNESS_LAB_PURE"):
        assert _kernels.BACKEND == "python"


@needs_ext
@settings(max_examples=300, deadline=None)
@given(edge_sets())
def test_backends_agree(case):
    n, edges = case
    assert _kernels.compiled_is_planar_edges(n, edges) == _kernels.python_is_planar_edges(n, edges)


@needs_ext
def test_backends_agree_near_maximal():
    # dense random graphs around the 3n - 6 threshold are where LR bugs hide
    rng = random.Random(7)
    for _ in range(400):
        n = rng.randint(5, 14)
        pairs = list(itertools.combinations(range(n), 2))
        edges = rng.sample(pairs, min(len(pairs), 3 * n - 6 + rng.randint(-3, 1)))
        assert _kernels.compiled_is_planar_edges(n, edges) == _kernels.python_is_planar_edges(n, edges)


@pytest.mark.parametrize("impl", ["python", "compiled"])
def test_known_instances(impl):
    f = _kernels.python_is_planar_edges if impl == "python" else _kernels.compiled_is_planar_edges
    if f is None:
        pytest.skip("extension not built")
    assert f(4, list(complete_graph(4).edges))
    assert not f(5, list(complete_graph(5).edges))
    assert not f(16, list(kn_pm(8, 2).edges))
    for part in build_decomposition(6).parts:
        assert f(48, list(part))
    assert f(3, [])


def test_pure_env_forces_fallback():
    code = "import thickness_lab._kernels as k; print(k.BACKEND)"
    env = {**os.environ, "THICKNESS_LAB_PURE": "1"}
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
