"""Build hook for the optional compiled kernels.

The Cython extension is built when Cython and a C compiler are available;
otherwise the package installs with the pure-Python kernels only.
"""

from setuptools import setup
from setuptools.command.build_ext import build_ext

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None


class optional_build_ext(build_ext):

    def run(self):
        try:
            super().run()
        except Exception as exc:
            print(f"compiled kernels skipped: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"compiled kernels skipped: {exc}")


ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        ["src/galekit/_kernels_c.pyx"],
        compiler_directives={"language_level": 3},
        quiet=True,
    )

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
