"""Build shim for the compiled scan kernel.

The extension is optional: if Cython or a C compiler is unavailable the
install still succeeds and the package falls back to the pure-python
screen at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = [
    Extension(
        "oddgirth._screen",
        ["src/oddgirth/_screen.pyx"],
        optional=True,
    )
]

setup(
    ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"})
    if cythonize
    else [],
)
