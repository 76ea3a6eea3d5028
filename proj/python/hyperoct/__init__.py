"""Signed-permutation group arithmetic, integer codec, discrete-log
protocols and an instrumented attack suite, backed by the C++ core."""

try:
    from ._core import *  # noqa: F401,F403  (installed package layout)
    from ._core import __version__  # noqa: F401
except ImportError:  # build-tree layout: _core.so sits on sys.path
    from _core import *  # noqa: F401,F403
    from _core import __version__  # noqa: F401
