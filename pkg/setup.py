"""Build script: compiles the optional Cython kernel.

The package works without the extension (a pure-Python kernel is selected
at import time), so a failed compile only costs speed.  Build in place
with: python setup.py build_ext --inplace
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "lieword._ckernel",
                ["src/lieword/_ckernel.pyx"],
                optional=True,
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
        },
    )
except ImportError:
    print("Cython not available; installing with the pure-Python kernel only.")

setup(ext_modules=ext_modules)
