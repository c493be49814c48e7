"""Build script: compiles the optional Smith normal form extension.

If Cython or a C toolchain is missing the build falls back to a pure-Python
wheel; polysmash.exactlin then selects the pure kernel at import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/polysmash/_snf_cy.pyx"], language_level=3, quiet=True
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
