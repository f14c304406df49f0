"""Build script: compiles the optional C kernel extension.

The package works without the extension (a pure-Python kernel is selected
at import time), so a missing Cython or C compiler only costs speed.
Set LCKIT_NO_EXT=1 to skip the extension build entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("LCKIT_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("lckit._core", ["src/lckit/_core.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
