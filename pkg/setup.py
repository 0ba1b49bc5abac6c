import numpy
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "arexit._kernels._speedups",
                ["src/arexit/_kernels/_speedups.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    # No Cython available: install pure-python only, the package falls back
    # to the numpy kernels at import time.
    ext_modules = []

setup(ext_modules=ext_modules)
