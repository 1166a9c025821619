"""Exact-arithmetic toolkit for Spin(7) structure algebra on R^8."""

__version__ = "0.1.0"
