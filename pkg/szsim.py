#!/usr/bin/env python3
"""
Command-line entry point
Run with: python szsim.py run line-x --steps 100 --out line_x.csv
"""
import sys
import os

# Add project root to path so we can import from api/ and lib/
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from api.cli import main

if __name__ == "__main__":
    sys.exit(main())
