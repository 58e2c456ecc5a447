"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (a pure-Python kernel module with the
same interface is selected at import time), so a failed compile downgrades to
a warning instead of aborting the install.
"""

import sys

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/tcore/_series_cy.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # no Cython / no compiler: fall back to pure Python
    print(f"tcore: skipping Cython kernel build ({exc})", file=sys.stderr)
    ext_modules = []

setup(ext_modules=ext_modules)
