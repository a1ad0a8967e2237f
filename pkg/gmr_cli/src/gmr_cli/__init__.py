"""Command-line front end for gmr_hilbert."""

__version__ = "0.1.0"
