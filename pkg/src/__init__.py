"""Mahlersol: exact Hahn-series solutions of linear Mahler equations"""

__version__ = "1.0.0"
