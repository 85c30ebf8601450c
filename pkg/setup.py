"""Build the optional Cython core; the package falls back to pure Python without it."""
import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("MOEAD_DYTS_NO_EXT") != "1":
    try:
        import numpy as np
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [
                Extension(
                    "moead_dyts._core",
                    ["src/moead_dyts/_core.pyx"],
                    include_dirs=[np.get_include()],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                    # no fast-math / FMA contraction: results must match the Python kernels bit for bit
                    extra_compile_args=["-O3", "-ffp-contract=off"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
