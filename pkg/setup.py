"""Build script: compiles the optional Cython kernels when Cython is available."""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install; cyclocat.kernels falls back
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("cyclocat._speedups", ["src/cyclocat/_speedups.pyx"], extra_compile_args=["-O2"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
