"""Build script: compiles the Cython kernel core when Cython is available.

The package works without the extension (a pure-Python fallback is selected
at import time), so a failed compile is downgraded to a warning.
"""

import warnings

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/bidiagbounds/kernels/_core.pyx"],
        compiler_directives={
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "language_level": "3",
        },
    )
except ImportError:
    warnings.warn("Cython not available; installing with pure-Python kernels only")

setup(ext_modules=ext_modules)
