import os

from setuptools import setup

ext_modules = []
if os.environ.get("EIGENTRACE_PURE_BUILD") != "1":
    try:
        import numpy as np
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "eigentrace._kernels._cykern",
                    ["src/eigentrace/_kernels/_cykern.pyx"],
                    include_dirs=[np.get_include()],
                )
            ],
            language_level=3,
        )
    except ImportError:
        # No Cython/numpy at build time: install pure-python only, the
        # package falls back to the numpy kernels at import.
        ext_modules = []

setup(ext_modules=ext_modules)
