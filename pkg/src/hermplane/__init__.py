"""Plane curves over F_{q^2} meeting the Hermitian curve in many rational points."""

__version__ = "0.1.0"
