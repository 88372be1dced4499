"""Build script for the optional compiled kernel extension.

The package is pure Python plus one Cython speedup module; if the
extension cannot be built the install still succeeds and the numpy
fallback in ``logcap._kernels.pure`` is used at runtime.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext = Extension(
        "logcap._kernels._native",
        ["src/logcap/_kernels/_native.pyx"],
        extra_compile_args=["-O3"],
        optional=True,
    )
    ext_modules = cythonize([ext], compiler_directives={"language_level": "3"})

setup(ext_modules=ext_modules)
