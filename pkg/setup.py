"""Build the optional Cython planarity kernel; the package works without it."""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("THICKNESS_LAB_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "thickness_lab._lr_kernel",
                    ["src/thickness_lab/_lr_kernel.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
