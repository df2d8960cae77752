from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

# The compiled jet kernel is optional: if Cython or a C compiler is missing
# the package falls back to the pure-Python backend at import time.
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "warpcurves._jets_cy",
                ["src/warpcurves/_jets_cy.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
else:
    ext_modules = []

setup(ext_modules=ext_modules)
