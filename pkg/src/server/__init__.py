"""HTTP service exposing the solver operations."""

__all__ = ['app']
