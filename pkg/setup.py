from setuptools import Extension, setup

# The compiled kernels are optional: eicount falls back to the pure-Python
# implementation in eicount._kernels_py when the extension is unavailable.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("eicount._kernels", ["src/eicount/_kernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
