"""Build script. The compiled kernel module is optional: when Cython or a C
compiler is missing the install degrades to the pure-numpy fallback selected
at import time by unitring.kernels."""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("UNITRING_PURE") != "1":
    try:
        import numpy
        from Cython.Build import cythonize
        from setuptools import Extension

        ext = Extension(
            "unitring.kernels._native",
            ["src/unitring/kernels/_native.pyx"],
            include_dirs=[numpy.get_include()],
            define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            optional=True,
        )
        ext_modules = cythonize(
            [ext],
            compiler_directives={
                "language_level": 3,
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except Exception:
        ext_modules = []

setup(ext_modules=ext_modules)
