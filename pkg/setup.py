# The compiled kernel is optional: without Cython, or if it fails to
# compile, the package installs and runs on the pure-Python kernel.
from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("hdist._ckernel", ["src/hdist/_ckernel.pyx"], extra_compile_args=["-O3"], optional=True)],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # ImportError or Cython CompileError
    print(f"hdist: building without the compiled kernel ({exc.__class__.__name__})")

setup(ext_modules=ext_modules)
