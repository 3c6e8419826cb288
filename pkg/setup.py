from setuptools import Extension, setup

import numpy as np
from Cython.Build import cythonize

ext_module = Extension(
    "eprchain._kernels._core",
    ["src/eprchain/_kernels/_core.pyx"],
    include_dirs=[np.get_include()],
)

setup(ext_modules=cythonize(ext_module, language_level=3))
