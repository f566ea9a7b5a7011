"""Exact symbolic toolkit for local charts of the Quot scheme of rank-d quotients of O^r on P^1."""

__version__ = "0.1.0"
