"""Kauffman bracket and tangle algebra toolkit."""

__version__ = "0.1.0"
