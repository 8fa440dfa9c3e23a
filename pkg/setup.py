"""Build script for the optional compiled kernel extension.

The package works without the extension: primroot.kernels falls back to the
pure-Python backend when primroot._kernels is absent.  A failed compile must
therefore not fail the install.
"""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the extension if possible, warn and continue if not."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing entirely
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            f"WARNING: building the compiled kernels failed ({exc}); "
            "installing with the pure-Python backend only",
            file=sys.stderr,
        )


ext_modules = []
cmdclass = {}
if os.environ.get("PRIMROOT_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("primroot._kernels", ["src/primroot/_kernels.pyx"])],
            language_level="3",
        )
        cmdclass = {"build_ext": OptionalBuildExt}
    except ImportError:
        print(
            "WARNING: Cython not available; installing with the pure-Python "
            "backend only",
            file=sys.stderr,
        )

setup(ext_modules=ext_modules, cmdclass=cmdclass)
