"""Build hook for the optional compiled kernels.

Without Cython (or a C compiler) the package installs pure-Python and
``luroth._backend`` falls back to ``luroth._kernels_py``.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("LUROTH_NO_EXT", "") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("luroth._kernels", ["src/luroth/_kernels.pyx"], extra_compile_args=["-O2"])],
            compiler_directives={"language_level": "3"},
            quiet=True,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
