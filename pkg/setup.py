from setuptools import Extension, setup
from Cython.Build import cythonize

extensions = [
    Extension("dispdyck._kernels", ["src/dispdyck/_kernels.pyx"]),
]

setup(
    ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"}),
)
