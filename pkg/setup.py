"""Build script: compiles the optional speedup extension.

The package is fully functional without the extension (a pure-Python
implementation of every kernel is selected at import time when the
compiled module is missing).  Set OSCTAB_NO_EXT=1 to skip compilation.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("OSCTAB_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "osctab._kernels_c",
                    ["src/osctab/_kernels_c.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
