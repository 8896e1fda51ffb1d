"""
Power Graph Products Package

Power graphs of finite groups, the direct, cartesian, normal and generalized
products of graphs, and the checks that tie P(G1 x G2) to the generalized
product of P(G1) and P(G2).
"""

__version__ = "1.0.0"
__description__ = "Power graphs of finite groups and their graph products"

from .core.config import settings
from .models.graph import SimpleGraph
from .models.group import FiniteGroup
from .services.toolkit_service import ToolkitService

__all__ = [
    "settings",
    "FiniteGroup",
    "SimpleGraph",
    "ToolkitService",
]
