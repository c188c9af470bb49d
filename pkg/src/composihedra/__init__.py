"""Composihedra: painted trees, convex hull realizations and their verification."""
__version__ = "0.1.0"
