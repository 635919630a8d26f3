"""Build script; compiles the optional C kernel backend when Cython is present.

The package is fully functional without it (pure-Python kernels are the
reference implementation). Build in place with:

    python setup.py build_ext --inplace
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("STREAMMATCH_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/streammatch/_speedups.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
