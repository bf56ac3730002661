"""Exact census of singular-fiber-type vectors of hyperelliptic Lefschetz
fibrations over the 2-sphere.

The heavy lifting lives in the C++ extension ``_hlfcensus``; this package
re-exports its surface. The extension sits inside the package in an
installed wheel and next to it on ``PYTHONPATH`` in a development build.
"""

try:
    from . import _hlfcensus as _impl
except ImportError:  # development build: extension on sys.path, not in-package
    import _hlfcensus as _impl

globals().update({k: v for k, v in vars(_impl).items() if not k.startswith("_")})

__all__ = sorted(k for k in vars(_impl) if not k.startswith("_"))
__version__ = "0.1.0"
