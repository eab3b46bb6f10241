"""Build script: compiles the optional int64 kernel extension.

The package works without the extension (pure-Python fallback); a failed
compile therefore downgrades to a warning instead of aborting the install.
"""
import sys

from setuptools import Extension, setup


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("ybforge: Cython not available, building pure-Python only",
              file=sys.stderr)
        return []
    return cythonize(
        [
            Extension(
                "ybforge._kernels._fastcore",
                ["src/ybforge/_kernels/_fastcore.pyx"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )


setup(ext_modules=extensions())
