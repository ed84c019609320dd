"""
Utility modules for Koszul Check.
"""
