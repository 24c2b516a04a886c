import numpy as np
from Cython.Build import cythonize
from setuptools import Extension, setup

ext = Extension(
    "lambert.kernels._cy_core",
    sources=["src/lambert/kernels/_cy_core.pyx", "src/lambert/kernels/core_kernels.c"],
    include_dirs=[np.get_include(), "src/lambert/kernels"],
    extra_compile_args=["-O3", "-ffast-math", "-march=native", "-fopenmp", "-funroll-loops"],
    extra_link_args=["-fopenmp", "-lmvec", "-lm"],
)

setup(ext_modules=cythonize([ext], language_level=3))
