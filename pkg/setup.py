"""Build script: compiles the optional Cython kernels.

If Cython or a C compiler is unavailable the package still installs; the
pure numpy kernels are selected at import time.
"""
import sys

from setuptools import setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/graphmems/kernels/_speedups.pyx"],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
    include_dirs = [numpy.get_include()]
except ImportError:
    print("cython/numpy unavailable at build time; installing pure-python kernels only",
          file=sys.stderr)
    include_dirs = []

setup(ext_modules=ext_modules, include_dirs=include_dirs)
