import os
import random
import subprocess
import sys

import pytest

from cyclocat import _pykernels, kernels
from cyclocat.arith import CyclotomicField

try:
    from cyclocat import _speedups
except ImportError:  # extension not built
    _speedups = None


def _cases(N, count, seed):
    F = CyclotomicField(N)
    rng = random.Random(seed)
    for _ in range(count):
        big = rng.random() < 0.3
        draw = (lambda: rng.randint(-10 ** 30, 10 ** 30)) if big else (lambda: rng.randint(-9, 9))
        a = _pykernels.normalize([draw() for _ in range(F.phi)], rng.randint(1, 40))
        b = _pykernels.normalize([draw() for _ in range(F.phi)], rng.randint(1, 40))
        yield F, a, b


@pytest.mark.skipif(_speedups is None, reason="compiled kernels not built")
@pytest.mark.parametrize("N", [15, 21, 35, 77])
def test_compiled_kernels_match_python(N):
    for F, (an, ad), (bn, bd) in _cases(N, 200, N):
        assert _speedups.add(an, ad, bn, bd) == _pykernels.add(an, ad, bn, bd)
        assert _speedups.sub(an, ad, bn, bd) == _pykernels.sub(an, ad, bn, bd)
        assert _speedups.mul(an, ad, bn, bd, F.table) == _pykernels.mul(an, ad, bn, bd, F.table)
        assert _speedups.scale(an, ad, -3, 7) == _pykernels.scale(an, ad, -3, 7)
        assert _speedups.normalize([2 * x for x in an], -2 * ad) == _pykernels.normalize([2 * x for x in an], -2 * ad)


@pytest.mark.skipif(_speedups is None, reason="compiled kernels not built")
def test_int64_overflow_falls_back():
    big = 2 ** 62
    assert _speedups.add((big, 0), 1, (big, 0), 1) == ((2 ** 63, 0), 1)
    assert _speedups.scale((big, 1), 1, 4, 1) == ((2 ** 64, 4), 1)
    assert _speedups.normalize((-(2 ** 63), 0), 1) == ((-(2 ** 63), 0), 1)


def test_environment_forces_python_backend():
    env = dict(os.environ, CYCLOCAT_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import cyclocat.kernels as k; print(k.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
    assert kernels.BACKEND in ("python", "cython")
