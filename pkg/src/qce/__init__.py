"""Syndrome-based noise estimation toolkit for CSS-type LDPC codes."""

__version__ = "0.1.0"
