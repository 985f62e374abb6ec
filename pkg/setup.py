from setuptools import Extension, setup

# The compiled kernels are optional: zgf.kernels falls back to the pure
# Python implementation when the extension is missing.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "zgf._kernels",
                ["src/zgf/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
