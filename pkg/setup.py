"""Build hook for the optional compiled kernel backend.

The package is fully functional without the extension; if Cython or a C
compiler is unavailable the build falls back to the pure-Python kernels.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "softsets._kernels_c",
                ["src/softsets/_kernels_c.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level="3",
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
