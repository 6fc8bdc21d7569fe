"""Build script: compiles the optional Cython kernel.

The package is fully functional without the extension; `gslogic._kernels`
falls back to the pure-Python implementation when the compiled module is
missing. Set GSLOGIC_NO_EXT=1 to skip compilation entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("GSLOGIC_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "gslogic._kernels._fast",
                    sources=["src/gslogic/_kernels/_fast.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
