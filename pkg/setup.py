from setuptools import setup

# The compiled kernel backend is optional: the package falls back to the
# pure-Python kernels at import time when the extension is absent.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/mullineux/_core/_ckernels.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
