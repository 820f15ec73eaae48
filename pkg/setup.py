"""Build script: compiles the optional Cython kernels, falling back to pure Python.

The package is fully functional without the extension; `hypersimplex._kernels`
selects the compiled module at import time when it is present.
"""

import os
import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


class _OptionalBuildExt(build_ext):
    """Build the extension if possible; never fail the install over it."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"warning: skipping compiled kernels ({exc})", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not build {ext.name} ({exc})", file=sys.stderr)


def _extensions():
    if os.environ.get("HYPERSIMPLEX_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("warning: Cython not available, using pure-Python kernels", file=sys.stderr)
        return []
    from setuptools import Extension

    ext = Extension(
        "hypersimplex._kernels._ckernels",
        ["src/hypersimplex/_kernels/_ckernels.pyx"],
        extra_compile_args=["-O3"],
    )
    return cythonize(
        [ext],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )


setup(
    ext_modules=_extensions(),
    cmdclass={"build_ext": _OptionalBuildExt},
)
