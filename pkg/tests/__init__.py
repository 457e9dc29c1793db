"""
Test suite for the return-times lab.
"""

__version__ = "1.0.0"
__all__ = []
