#!/usr/bin/env python3
"""
Main entry point for the power graph products command line.
"""

import sys
from pathlib import Path

# Add project root to Python path
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from src.power_graph_products.cli.main import main

if __name__ == "__main__":
    sys.exit(main())
