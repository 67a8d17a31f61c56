"""Stabilizer codes carrying a quantum and a classical payload.

Thin Python surface over the C++ core: codes are built from parity-check
rows given as bit strings, Pauli operators travel as letter strings, and
all decoding, distance-search, and simulation entry points are re-exported
from the compiled module.
"""

from ._core import *  # noqa: F401,F403
