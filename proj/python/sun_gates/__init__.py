"""SU(N)-invariant two-qudit scattering gates: generators, channel projectors,
invariant gates, crossing and the one-ancilla block encoding."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401

__version__ = "0.1.0"
