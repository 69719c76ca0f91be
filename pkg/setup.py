from setuptools import setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install; kernels fall back at import
    ext_modules = []
else:
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("arcsine_moments._ckernels", ["src/arcsine_moments/_ckernels.pyx"], optional=True)],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
