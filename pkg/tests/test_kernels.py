"""The compiled kernels and the fallback must agree exactly."""

import random

import pytest

from actlab import _pykernels, kernels
from actlab.acts import enumerate_acts, generator_levels, _generator_candidates
from actlab.fileio import load_catalog

compiled = pytest.mark.skipif(kernels.BACKEND != "cython", reason="extension not built")


def test_backend_selected():
    assert kernels.BACKEND in {"cython", "python"}


@compiled
def test_hom_search_agrees():
    rng = random.Random(5)
    for M in load_catalog(max_size=4):
        acts = [A for m in range(0, 4) for A in enumerate_acts(M, m)]
        for _ in range(30):
            A, B = rng.choice(acts), rng.choice(acts)
            fixed = [-1] * A.size
            if A.size and B.size and rng.random() < 0.5:
                fixed[rng.randrange(A.size)] = rng.randrange(B.size)
            r1 = kernels.close_partial(A.flat, A.size, B.flat, B.size, M.size, fixed)
            r2 = _pykernels.close_partial(A.flat, A.size, B.flat, B.size, M.size, fixed)
            assert _norm(r1) == _norm(r2)
            if r1[0] is None:
                continue
            for inj in (False, True):
                for lim in (-1, 1, 3):
                    got = kernels.hom_search(A.flat, A.size, B.flat, B.size, M.size, r1[0], inj, lim)
                    want = _pykernels.hom_search(A.flat, A.size, B.flat, B.size, M.size, r1[0], inj, lim)
                    assert [list(x) for x in got] == [list(x) for x in want]


def _norm(res):
    m, c = res
    return (None if m is None else list(m), None if c is None else tuple(c))


@compiled
def test_canonical_and_enumeration_agree():
    for M in load_catalog(max_size=4):
        gens, levels = generator_levels(M)
        lv = [list(x) for x in levels]
        for m in range(1, 4):
            cands = _generator_candidates(M, m)
            t1 = kernels.transformation_homs(M.flat, M.size, m, list(gens), lv, cands)
            t2 = _pykernels.transformation_homs(M.flat, M.size, m, list(gens), lv, cands)
            assert sorted(map(tuple, t1)) == sorted(map(tuple, t2))
            for t in t1[:20]:
                a = kernels.canonical_table(list(t), M.size, m)
                b = _pykernels.canonical_table(list(t), M.size, m)
                assert list(a[0]) == list(b[0]) and list(a[1]) == list(b[1])


def test_all_maps():
    assert len(kernels.all_maps(3)) == 27
    assert sorted(map(tuple, kernels.all_maps(2))) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_pure_python_fallback_selected_by_env():
    import os
    import subprocess
    import sys

    code = ("from actlab import kernels; from actlab.fileio import catalog_monoid;"
            "from actlab.acts import enumerate_acts;"
            "print(kernels.BACKEND, len(enumerate_acts(catalog_monoid('rz3'), 4)))")
    env = dict(os.environ, ACTLAB_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                         text=True, check=True).stdout.split()
    assert out == ["python", "10"]
