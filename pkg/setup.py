"""Build shim: compile the optional scan-kernel extension when possible.

The package is fully functional without it (kernel.py falls back to the
pure-Python twin), so any failure here is reported and swallowed rather
than failing the install.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/ghostcycles/_kernel_c.pyx",
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # no Cython or no C toolchain: pure fallback
    print(f"skipping compiled kernel ({exc}); pure-Python backend will be used")

setup(ext_modules=ext_modules)
