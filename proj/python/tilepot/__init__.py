"""Exact-arithmetic toolkit for flexible-tile assembly pot design."""

try:
    from ._tilepot import *  # noqa: F401,F403
except ImportError:
    # Development layout: the extension sits on sys.path directly.
    from _tilepot import *  # noqa: F401,F403
