"""Build hook for the optional compiled kernel module.

The package is pure Python plus one Cython extension holding the hot search
kernels.  When Cython (or a C compiler) is unavailable, or RBMINOR_PURE is
set, the extension is skipped and the pure-Python twin in
rbminor/kernels/pykernels.py serves every call.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("RBMINOR_PURE"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/rbminor/kernels/_ckernels.pyx"],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
