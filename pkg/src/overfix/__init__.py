"""overfix: static detection and source-level repair of integer overflows in a C subset."""

__version__ = "0.1.0"
