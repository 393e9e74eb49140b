from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install; kernels fall back at import time
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("streamdfs._kernels", ["src/streamdfs/_kernels.pyx"])],
        language_level=3,
    )

setup(ext_modules=ext_modules)
