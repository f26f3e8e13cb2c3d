"""Bipartite entanglement measures and superposition negativity bounds."""

from negbounds._negbounds import *  # noqa: F401,F403
from negbounds._negbounds import __doc__  # noqa: F401
