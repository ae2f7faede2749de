"""Build script. The Cython kernel is optional: if Cython or a C compiler
is unavailable the package installs anyway and falls back to the pure
numpy kernel at import time.

Force-skip the extension with RMSPEC_NO_EXT=1.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"rmspec: skipping optional Cython kernel ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"rmspec: could not build {ext.name} ({exc}); "
                  "the pure-Python kernel will be used")


extensions = []
if not os.environ.get("RMSPEC_NO_EXT"):
    try:
        from Cython.Build import cythonize

        extensions = cythonize(
            [Extension("rmspec._kernel_cy", ["src/rmspec/_kernel_cy.pyx"])],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        print("rmspec: Cython not available; building without the compiled kernel")

setup(ext_modules=extensions, cmdclass={"build_ext": OptionalBuildExt})
