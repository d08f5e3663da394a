"""Bernoulli mixture clustering via maximal total correlation."""

try:
    from ._bmmtc import *  # noqa: F401,F403
    from ._bmmtc import __doc__ as _doc
except ImportError:  # in-tree runs put the extension next to this package
    from _bmmtc import *  # noqa: F401,F403
    from _bmmtc import __doc__ as _doc

__doc__ = _doc
__version__ = "0.1.0"
