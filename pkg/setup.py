# Builds the optional compiled candidate-trial kernel.  The package works
# without it (a pure-Python twin is selected at import time), so a failed
# extension build must not fail the install.
from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "domdelay._p7core",
                ["src/domdelay/_p7core.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
