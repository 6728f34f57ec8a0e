"""engelcr: exact Cartan-frame invariants for embedded Engel-type CR
manifolds in C^3 given by two polynomial graphing functions."""

__version__ = "0.1.0"
