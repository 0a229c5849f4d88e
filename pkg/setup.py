"""Build script for the optional Cython kernels.

The package is fully functional without them; when Cython or a C compiler
is missing the pure-Python kernels are used instead.
"""
import os

from setuptools import setup

ext_modules = []
if os.environ.get("AMICABLE_LATTICE_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "amicable_lattice._ckernels",
                    ["src/amicable_lattice/_ckernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
