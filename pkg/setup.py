"""Build the compiled kernel extension.

The package works without it (a pure-numpy fallback is selected at import),
but the hot loops are an order of magnitude faster compiled.  Use
``python setup.py build_ext --inplace`` for in-tree development builds.
"""

import numpy as np
from setuptools import setup
from setuptools.extension import Extension

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = [
    Extension(
        "masspart._kernels",
        ["src/masspart/_kernels.pyx"],
        include_dirs=[np.get_include()],
        extra_compile_args=["-O3"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
]

setup(
    ext_modules=cythonize(extensions, language_level=3) if cythonize else [],
)
