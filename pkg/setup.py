"""Build the optional Cython kernels; installation proceeds without them."""

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # no compiler, no Cython: fall back to pure Python
            print("warning: compiled kernels not built (%s)" % exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print("warning: could not build %s (%s)" % (ext.name, exc))


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    from setuptools import Extension
    return cythonize([Extension("galmod._ckernels", ["src/galmod/_ckernels.pyx"])],
                     compiler_directives={"language_level": 3})


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
