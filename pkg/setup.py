from Cython.Build import cythonize
from setuptools import Extension, setup

# -ffp-contract=off: the compiled kernels must stay bit-identical to the
# pure-Python backend, so FMA contraction is disabled.
extensions = [
    Extension(
        "shiftstats._core",
        ["src/shiftstats/_core.pyx"],
        extra_compile_args=["-O3", "-ffp-contract=off"],
    )
]

setup(
    ext_modules=cythonize(
        extensions,
        compiler_directives={"language_level": "3"},
    )
)
