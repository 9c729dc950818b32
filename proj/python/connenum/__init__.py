"""Enumerate connectors and components of connectivity systems on mixed graphs.

Graphs are given in the text format read by the ``connenum`` executable.
"""

from ._connenum import Error, ParseError, components, connectors, modes

__all__ = ["Error", "ParseError", "components", "connectors", "modes"]
