"""Build script for the compiled eigensolver kernel.

The extension is the hot path (Householder reduction + QL iteration); a
pure-Python/numpy twin in graphenergy._eigen_py is selected at import time
when the extension is unavailable, so a failed build still yields a working
(slower) package.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "graphenergy._eigen_cy",
                ["src/graphenergy/_eigen_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "initializedcheck": False,
        },
    )
else:
    ext_modules = []

setup(ext_modules=ext_modules)
