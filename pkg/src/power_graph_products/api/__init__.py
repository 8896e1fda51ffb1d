"""
API package for the FastAPI application.
"""
from .app import app

__all__ = ['app']
