"""Fusion products of rectangular sl(n+1)-modules and their presentations by relations."""

__version__ = "0.1.0"
