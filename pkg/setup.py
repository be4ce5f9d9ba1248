"""Optional build of the compiled scan kernels.

The package is pure Python by default; when Cython and a C compiler are
available the hot table-scan loops are additionally built as an extension
module, picked up automatically at import time. Failure to build is never
fatal: the pure-Python kernels are the reference implementation.

Set TWISTPOST_PURE=1 to skip the extension build entirely.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("TWISTPOST_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/twistpost/_kernels/_ckernels.pyx"],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
