"""Exact dimer boundary measurements and SL_r web invariants."""

try:
    from ._webdimer import *  # noqa: F401,F403  (installed layout)
    from . import _webdimer as _impl
except ImportError:  # development layout: extension on PYTHONPATH
    from _webdimer import *  # noqa: F401,F403
    import _webdimer as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
