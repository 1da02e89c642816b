from setuptools import Extension, setup

# The burning kernels have a compiled core with a pure-Python fallback;
# the package works (more slowly) if the extension cannot be built.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("dfsburn._burncore", ["src/dfsburn/_burncore.pyx"])],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
