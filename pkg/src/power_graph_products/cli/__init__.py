"""
Command-line surface for building power graphs, products and running checks.
"""
from .main import build_parser, main

__all__ = ["build_parser", "main"]
