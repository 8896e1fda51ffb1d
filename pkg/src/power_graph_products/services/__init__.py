"""
Services package for groups, power graphs, graph products and verification.
"""
from .graph_service import GraphService
from .group_service import GroupService
from .power_graph_service import PowerGraphBundle, PowerGraphService
from .product_service import ProductService
from .toolkit_service import ToolkitService
from .verification_service import VerificationService

__all__ = [
    'GraphService',
    'GroupService',
    'PowerGraphBundle',
    'PowerGraphService',
    'ProductService',
    'ToolkitService',
    'VerificationService',
]
