"""Build script: compiles the optional Gray-code sweep extension.

The package is fully functional without the extension (a pure-Python
kernel with identical semantics is selected at import time), so any
failure here only costs speed.
"""

import sys

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "cordiality._sweep",
                sources=["src/cordiality/_sweep.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    sys.stderr.write("Cython not found; installing with the pure-Python sweep kernel only\n")

setup(ext_modules=ext_modules)
