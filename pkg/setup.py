from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "pathforge._foldcore",
                ["src/pathforge/_foldcore.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        language_level="3",
    )
except ImportError:
    # No Cython: install the pure-Python package, fold backend falls back.
    ext_modules = []

setup(ext_modules=ext_modules)
