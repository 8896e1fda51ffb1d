"""
Utilities package for progressions, table validation, parsing and serialization.
"""
from .progressions import ap_contains, aps_intersect_oracle, aps_intersect_positively
from .validation import validate_cayley_table

__all__ = ['ap_contains', 'aps_intersect_oracle', 'aps_intersect_positively', 'validate_cayley_table']
