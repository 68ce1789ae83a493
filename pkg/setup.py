"""Optional build of the compiled row-reduction kernel.

The package is pure Python by default; `osphom.linalg` picks up the
compiled `_speedups` extension when it has been built (e.g. via
`python setup.py build_ext --inplace`) and falls back to the pure
implementation otherwise.  Missing Cython or a missing C compiler must
not break installation.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("OSPHOM_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/osphom/linalg/_speedups.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except Exception:
        ext_modules = []

setup(ext_modules=ext_modules)
