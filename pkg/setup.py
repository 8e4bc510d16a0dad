"""Build script for the two optional C extension kernels.

The package works without them (pure-Python fallbacks are selected at
import time); building them is strongly recommended for the acceptance
suite's timing budget.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install still works
    cythonize = None

extensions = [
    Extension("dynplanar._connkern_cy", ["src/dynplanar/_connkern_cy.pyx"]),
    Extension("dynplanar.oracle._orakern_cy", ["src/dynplanar/oracle/_orakern_cy.pyx"]),
]

setup(
    ext_modules=cythonize(extensions, language_level="3") if cythonize else [],
)
