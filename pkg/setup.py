"""Build script: compiles the optional fixpoint kernel extension.

The package works without the compiled extension (a pure-Python fallback with
identical semantics is selected at import time), so any compilation problem
downgrades the install instead of failing it.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "elpmend._kernel",
                ["src/elpmend/_kernel.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - depends on toolchain
    print(f"elpmend: building without compiled kernel ({exc})")

setup(ext_modules=ext_modules)
