from setuptools import Extension, setup
from Cython.Build import cythonize

# -ffp-contract=off keeps the compiled kernels on plain IEEE double arithmetic
# (no FMA contraction), so both backends evaluate the same expression trees.
extensions = [
    Extension(
        "hgf._core",
        sources=["src/hgf/_core.pyx"],
        extra_compile_args=["-O2", "-ffp-contract=off"],
    )
]

setup(ext_modules=cythonize(extensions, language_level=3))
