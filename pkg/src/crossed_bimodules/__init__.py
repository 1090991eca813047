"""Crossed group categories, bimodule triples and their categories of elements."""

__version__ = "0.1.0"
