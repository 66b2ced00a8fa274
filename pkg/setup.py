"""Build script: compiles the optional C kernel extension.

The package is fully functional without the extension (a pure-Python
backend is selected at import time); building it just makes the hot
loops fast. Install with ``pip install -e . --no-build-isolation``.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "grouplab._kernels.compiled",
                ["src/grouplab/_kernels/compiled.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "initializedcheck": False,
            "cdivision": True,
        },
    )

setup(ext_modules=ext_modules)
