import os

from setuptools import Extension, setup

# The compiled kernels are optional: without Cython (or with
# ACTLAB_NO_EXT=1) the package installs and runs on the pure-Python fallback.
ext_modules = []
if not os.environ.get("ACTLAB_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("actlab._speedups", ["src/actlab/_speedups.pyx"],
                       extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
