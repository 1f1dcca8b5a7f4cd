import os

from setuptools import Extension, setup

# The compiled kernel is an optional speedup; the package is fully functional
# without it (a pure-Python path is selected at import time).
ext_modules = []
if not os.environ.get("FROBGEN_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "frobgen._dpcore",
                    ["src/frobgen/_dpcore.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
