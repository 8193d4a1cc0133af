"""Finite quantum graphs: Mycielskians, twins, distinguishing numbers."""

from _qmyc import *  # noqa: F401,F403
from _qmyc import __doc__  # noqa: F401
