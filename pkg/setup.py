"""Build script for the optional compiled reduction kernel.

The package works without the extension: `lambdalab.reduce` falls back to
the pure-Python kernel when `lambdalab._kernel` is missing.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("lambdalab._kernel", ["src/lambdalab/_kernel.pyx"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
