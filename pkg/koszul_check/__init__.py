"""
Koszul Check - decide (piecewise) domain and prime properties of quadratic
quiver algebras through Koszul duality, at finite truncation.
"""

__version__ = "0.3.0"
