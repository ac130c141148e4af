"""Spectra of the cubic Dirac operator family on oscillator-group quotients."""

try:
    from ._oscdirac import *  # noqa: F401,F403
    from ._oscdirac import __version__  # noqa: F401
except ImportError:  # development layout: extension on PYTHONPATH
    from _oscdirac import *  # noqa: F401,F403
    from _oscdirac import __version__  # noqa: F401
