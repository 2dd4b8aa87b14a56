"""2-sphere subcomplex search and triangle-deletion preprocessing for
2-dimensional simplicial complexes (C++ core)."""

try:
    from ._twosphere import *  # noqa: F401,F403
    from ._twosphere import __doc__ as _core_doc  # noqa: F401
except ImportError:  # extension on sys.path directly (in-tree builds)
    from _twosphere import *  # noqa: F401,F403

__version__ = "0.1.0"
