"""Builds the optional Cython kernel.

The package works without it; set NODAL_PRIME_NO_EXT=1 to skip the build.
"""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:
            sys.stderr.write(f"warning: skipping compiled kernel ({exc})\n")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            sys.stderr.write(f"warning: failed to build {ext.name} ({exc})\n")


ext_modules = []
if not os.environ.get("NODAL_PRIME_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        sys.stderr.write("warning: Cython not available, using pure-Python backend\n")
    else:
        ext_modules = cythonize(
            [
                Extension(
                    "nodal_prime._kernel",
                    ["src/nodal_prime/_kernel.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
