from setuptools import setup

# The compiled kernel is optional: without Cython (or a C compiler) the
# package falls back to the pure-Python kernel selected at import time.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/muhasse/_kernel.pyx"],
        language_level=3,
        compiler_directives={"boundscheck": False, "wraparound": False},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
